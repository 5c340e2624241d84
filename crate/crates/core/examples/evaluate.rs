//! Density, distribution, hazard and quantiles of one BG distribution,
//! with the mixture series beside the closed form.
use beta_gompertz::analytic::{cdf_hypergeometric, cdf_series};
use beta_gompertz::{BGParams, SeriesControl};

fn main() -> beta_gompertz::Result<()> {
    let p = BGParams::new(1.0, 0.5, 2.0, 2.0)?;
    let ctl = SeriesControl::default();
    println!("{:>6} {:>12} {:>12} {:>12} {:>12} {:>12}", "x", "pdf", "cdf", "hrf", "cdf_series", "cdf_2F1");
    for i in 0..=10 {
        let x = 0.25 * i as f64;
        println!(
            "{x:>6.2} {:>12.8} {:>12.8} {:>12.8} {:>12.8} {:>12.8}",
            p.pdf(x)?,
            p.cdf(x)?,
            p.hrf(x)?,
            cdf_series(x, &p, &ctl)?,
            cdf_hypergeometric(x, &p, &ctl)?
        );
    }
    for u in [0.05, 0.25, 0.5, 0.75, 0.95] {
        println!("Q({u}) = {:.8}", p.quantile(u)?);
    }
    Ok(())
}
