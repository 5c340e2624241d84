//! Seeded sampling checked against the model with a K-S test.
use beta_gompertz::inference::ks_test;
use beta_gompertz::BGParams;

fn main() -> beta_gompertz::Result<()> {
    let p = BGParams::new(0.5, 0.5, 0.5, 0.5)?;
    for n in [100, 1_000, 10_000] {
        let x = p.sample(n, 7)?;
        let ks = ks_test(&x, |v| p.cdf(v))?;
        let mean = x.iter().sum::<f64>() / n as f64;
        println!("n {n:>6}  mean {mean:.4}  D {:.4}  p {:.4}", ks.stat, ks.pvalue);
    }
    println!("E[X] = {:.4}", beta_gompertz::analytic::moment(1, &p)?);
    Ok(())
}
