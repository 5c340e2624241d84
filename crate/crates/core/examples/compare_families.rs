//! Six nested families fitted to a data file (default: the Aarset data),
//! with information criteria and likelihood-ratio tests against BG.
use beta_gompertz::cli::compare_families;
use beta_gompertz::inference::Dataset;

fn main() -> beta_gompertz::Result<()> {
    let d = match std::env::args().nth(1) {
        Some(path) => Dataset::from_file(path)?,
        None => beta_gompertz::datasets::aarset()?,
    };
    println!("{:<3} {:>10} {:>10} {:>10} {:>10} {:>10} {:>8}", "", "-logL", "AIC", "AICC", "BIC", "LRT", "p");
    for row in compare_families(&d) {
        let Some(fit) = &row.fit else {
            println!("{:<3} failed: {}", row.family.to_string(), row.error.unwrap_or_default());
            continue;
        };
        let (aic, aicc, bic) = row.gof.map_or((f64::NAN, f64::NAN, f64::NAN), |g| (g.aic, g.aicc, g.bic));
        let (stat, pv) = row.lrt_vs_bg.map_or((f64::NAN, f64::NAN), |l| (l.stat, l.pvalue));
        println!(
            "{:<3} {:>10.4} {:>10.4} {:>10.4} {:>10.4} {:>10.4} {:>8.4}  {:?}",
            row.family.to_string(),
            -fit.loglik,
            aic,
            aicc,
            bic,
            stat,
            pv,
            fit.estimate.to_map()
        );
    }
    Ok(())
}
