use beta_gompertz::datasets::aarset;
use beta_gompertz::inference::{
    family_log_likelihood, family_score, fit_mle, log_likelihood, lrt, FitOptions, FitStatus,
};
use beta_gompertz::submodels::{ModelFamily, ModelSpec};
use beta_gompertz::BGParams;

#[test]
fn aarset_bg_optimum() {
    let d = aarset().unwrap();
    let fit = fit_mle(&d, ModelFamily::BG, &FitOptions::default()).unwrap();
    assert_eq!(fit.status, FitStatus::Converged);
    assert!((fit.loglik + 220.6718).abs() < 1e-3, "{}", fit.loglik);
    let m = fit.estimate.to_map();
    assert!((m["alpha"] - 0.2158).abs() < 2e-3);
    assert!((m["beta"] - 0.2467).abs() < 2e-3);
    assert!((m["gamma"] - 0.0882).abs() < 1e-3);
    let g = family_score(&d.values, &fit.estimate).unwrap();
    for (v, p) in g.iter().zip(&fit.estimate.values) {
        assert!((v * p).abs() < 1e-6, "log-scale score {}", v * p);
    }
}

#[test]
fn aarset_gg_and_lrt_against_bg() {
    let d = aarset().unwrap();
    let gg = fit_mle(&d, ModelFamily::GG, &FitOptions::default()).unwrap();
    assert!((gg.loglik + 222.2441).abs() < 1e-3, "{}", gg.loglik);
    let bg = fit_mle(&d, ModelFamily::BG, &FitOptions::default()).unwrap();
    let t = lrt(&gg, &bg).unwrap();
    assert_eq!(t.df, 1);
    assert!((t.stat - 3.1445).abs() < 2e-3, "{}", t.stat);
    assert!((t.pvalue - 0.0762).abs() < 1e-3, "{}", t.pvalue);
}

#[test]
fn evaluated_likelihood_at_rounded_estimates() {
    let d = aarset().unwrap();
    let p = BGParams::new(0.0003, 0.0882, 0.2158, 0.2467).unwrap();
    let ll = log_likelihood(&d.values, &p).unwrap();
    assert!((ll + 220.869).abs() < 5e-3, "{ll}");
    let gg = ModelSpec::from_full(ModelFamily::GG, [0.0001, 0.0882, 0.2158, 1.0]).unwrap();
    let prior = ModelSpec::from_full(ModelFamily::GG, [0.00143, 0.044, 0.421, 1.0]).unwrap();
    let prior_ll = family_log_likelihood(&d.values, &prior).unwrap();
    assert!((prior_ll + 224.1274).abs() < 1e-3, "{prior_ll}");
    assert!(family_log_likelihood(&d.values, &gg).unwrap().is_finite());
}

#[test]
fn exponential_fit_is_reciprocal_mean() {
    let d = aarset().unwrap();
    let fit = fit_mle(&d, ModelFamily::E, &FitOptions::default()).unwrap();
    let theta = fit.estimate.values[0];
    assert!((theta * d.mean() - 1.0).abs() < 1e-9);
    let se = fit.std_errors.as_ref().unwrap()["theta"];
    assert!((se - theta / (d.n() as f64).sqrt()).abs() < 1e-9 * theta);
}

#[test]
fn fits_are_bit_reproducible() {
    let p = BGParams::new(0.5, 0.5, 2.0, 2.0).unwrap();
    let d = beta_gompertz::inference::Dataset::new(p.sample(80, 11).unwrap()).unwrap();
    let a = fit_mle(&d, ModelFamily::BG, &FitOptions::default()).unwrap();
    let b = fit_mle(&d, ModelFamily::BG, &FitOptions::default()).unwrap();
    assert_eq!(a.estimate.values, b.estimate.values);
    assert_eq!(a.loglik.to_bits(), b.loglik.to_bits());
    assert_eq!(a.observed_info, b.observed_info);
}
