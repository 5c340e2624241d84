//! Quantile-based skewness and kurtosis as γ grows, others fixed.
use beta_gompertz::analytic::{bowley_skewness, moors_kurtosis};
use beta_gompertz::BGParams;

fn main() -> beta_gompertz::Result<()> {
    println!("{:>8} {:>10} {:>10}", "gamma", "bowley", "moors");
    for gamma in [0.01, 0.05, 0.1, 0.5, 1.0, 2.0, 5.0] {
        let p = BGParams::new(1.0, gamma, 1.5, 0.5)?;
        println!("{gamma:>8} {:>10.5} {:>10.5}", bowley_skewness(&p)?, moors_kurtosis(&p)?);
    }
    Ok(())
}
