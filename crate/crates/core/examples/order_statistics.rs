//! Distribution and means of the order statistics of a sample of five.
use beta_gompertz::analytic::{order_stat_cdf, order_stat_moment};
use beta_gompertz::BGParams;

fn main() -> beta_gompertz::Result<()> {
    let p = BGParams::new(1.0, 1.0, 2.0, 2.0)?;
    let n = 5;
    let median = p.quantile(0.5)?;
    for i in 1..=n {
        println!(
            "X({i}:{n})  E {:.6}  E^2 {:.6}  P(X <= median) {:.6}",
            order_stat_moment(1, i, n, &p)?,
            order_stat_moment(2, i, n, &p)?,
            order_stat_cdf(median, i, n, &p)?
        );
    }
    let total: f64 = (1..=n).map(|i| order_stat_moment(1, i, n, &p)).sum::<beta_gompertz::Result<f64>>()?;
    println!("sum of means {total:.6} = n E[X] {:.6}", n as f64 * beta_gompertz::analytic::moment(1, &p)?);
    Ok(())
}
