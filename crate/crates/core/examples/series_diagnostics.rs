//! Diagnostics table for the series expansions: each series against its
//! quadrature or closed-form reference.
use beta_gompertz::analytic::diagnostics::{printed_series_report, Verdict};
use beta_gompertz::SeriesControl;

fn main() -> beta_gompertz::Result<()> {
    let max_terms = std::env::args().nth(1).map_or(Ok(10_000), |s| s.parse()).unwrap_or(10_000);
    let ctl = SeriesControl::new(max_terms, 1e-12)?;
    let report = printed_series_report(&ctl)?;
    print!("{}", report.to_table());
    println!(
        "agree {}  disagree {}  not converged {}  no oracle {}",
        report.count(Verdict::Agrees),
        report.count(Verdict::Disagrees),
        report.count(Verdict::NotConverged),
        report.count(Verdict::NoOracle)
    );
    Ok(())
}
