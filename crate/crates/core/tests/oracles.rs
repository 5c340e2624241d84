//! Frozen reference values computed independently with mpmath at 25 digits.

use beta_gompertz::analytic::{
    bowley_skewness, moment, moors_kurtosis, order_stat_cdf, order_stat_moment, renyi_entropy,
    shannon_entropy,
};
use beta_gompertz::specfun::{gauss_2f1, inv_reg_inc_beta, kolmogorov_sf, reg_inc_beta, reg_inc_gamma_upper};
use beta_gompertz::{gompertz_cdf, BGParams, SeriesControl};

fn bg(theta: f64, gamma: f64, alpha: f64, beta: f64) -> BGParams {
    BGParams::new(theta, gamma, alpha, beta).unwrap()
}

fn close(got: f64, want: f64, rel: f64) {
    assert!(
        (got - want).abs() <= rel * want.abs(),
        "got {got:e}, want {want:e} (rel {:e})",
        ((got - want) / want).abs()
    );
}

#[test]
fn special_functions() {
    close(reg_inc_beta(0.3, 2.5, 0.7).unwrap(), 0.029_814_024_845_250_465, 1e-12);
    close(inv_reg_inc_beta(0.25, 0.2158, 0.2467).unwrap(), 0.021_704_803_679_038_766, 1e-10);
    let ctl = SeriesControl::new(10_000, 1e-16).unwrap();
    close(gauss_2f1(0.5, 0.3, 1.7, 0.4, &ctl).unwrap(), 1.041_808_165_367_022_5, 1e-13);
    close(kolmogorov_sf(1.0).unwrap(), 0.269_999_671_677_354_52, 1e-12);
    close(reg_inc_gamma_upper(0.5, 3.1444 / 2.0).unwrap(), 0.076_188_017_011_252_176, 1e-10);
    close(reg_inc_gamma_upper(1.0, 29.3179 / 2.0).unwrap(), 4.302_282_306_987_593e-7, 1e-10);
}

#[test]
fn distribution_functions() {
    close(gompertz_cdf(2.0, 0.5, 0.3).unwrap(), 0.745_943_348_809_867_6, 1e-13);
    close(bg(1.0, 1.0, 2.0, 2.0).pdf(1.0).unwrap(), 0.430_635_997_544_125_2, 1e-12);
    close(bg(0.5, 0.5, 2.0, 3.0).cdf(1.5).unwrap(), 0.894_213_555_744_559_9, 1e-12);
    close(bg(0.1, 1.0, 0.5, 2.0).hrf(2.0).unwrap(), 1.708_650_624_720_899, 1e-11);
    close(bg(1.0, 1.0, 2.0, 3.0).reversed_hrf(0.5).unwrap(), 2.066_327_120_772_688_4, 1e-12);
    close(bg(1.0, 0.5, 2.0, 2.0).pdf(0.7).unwrap(), 0.903_884_126_096_376_3, 1e-12);
    close(bg(1.0, 1.0, 2.0, 3.0).cdf(1.2).unwrap(), 0.996_484_627_654_750_8, 1e-13);
    close(bg(0.5, 0.5, 1.5, 2.5).cdf(1.0).unwrap(), 0.682_639_940_406_237_2, 1e-12);
}

#[test]
fn quantiles_and_shape() {
    let p = bg(0.0003, 0.0882, 0.2158, 0.2467);
    close(p.quantile(0.5).unwrap(), 56.996_220_805_629_66, 1e-10);
    close(bowley_skewness(&p).unwrap(), -0.279_611_197_902_691_7, 1e-9);
    close(moors_kurtosis(&bg(1.0, 1.0, 1.0, 1.0)).unwrap(), 1.136_589_448_857_763, 1e-10);
}

#[test]
fn moments_and_entropies() {
    let unit = bg(1.0, 1.0, 1.0, 1.0);
    close(moment(1, &unit).unwrap(), 0.596_347_362_323_194_1, 1e-10);
    close(renyi_entropy(2.0, &unit).unwrap(), 0.287_682_072_451_780_9, 1e-9);
    close(shannon_entropy(&unit).unwrap(), 0.403_652_637_676_805_9, 1e-9);
}

#[test]
fn order_statistics() {
    close(order_stat_cdf(1.0, 2, 3, &bg(1.0, 1.0, 1.0, 1.0)).unwrap(), 0.915_017_563_170_042_8, 1e-12);
    close(order_stat_moment(1, 3, 5, &bg(1.0, 1.0, 2.0, 2.0)).unwrap(), 0.536_349_858_474_622_4, 1e-9);
}

