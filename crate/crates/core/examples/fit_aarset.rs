//! Fits all six families to the bundled Aarset data.
use beta_gompertz::datasets::aarset;
use beta_gompertz::inference::{fit_mle, FitOptions, GofReport};
use beta_gompertz::submodels::ModelFamily;

fn main() -> beta_gompertz::Result<()> {
    let d = aarset()?;
    for family in ModelFamily::ALL {
        let t = std::time::Instant::now();
        let f = fit_mle(&d, family, &FitOptions::default())?;
        let g = GofReport::for_fit(&d, &f)?;
        println!(
            "{family:>2}  -logL {:>10.4}  {:?}  starts {}/{}  D {:.4} p {:.4}  AIC {:.4}  {:?}  se {:?}  ({:.2?})",
            -f.loglik, f.estimate.to_map(), f.starts_converged, f.n_restarts_used,
            g.ks_stat, g.ks_pvalue, g.aic, f.status, f.std_errors, t.elapsed()
        );
    }
    Ok(())
}
