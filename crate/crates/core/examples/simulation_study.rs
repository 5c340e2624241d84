//! Desk-scale Monte Carlo study of the BG estimator.
//!
//! Usage: `cargo run --release --example simulation_study -- [reps] [seed]`
use beta_gompertz::simulation::{desk_scenarios, run_scenario};

fn main() -> beta_gompertz::Result<()> {
    let mut args = std::env::args().skip(1);
    let reps = args.next().and_then(|a| a.parse().ok()).unwrap_or(200);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(2024);
    println!("order: theta gamma alpha beta");
    for s in desk_scenarios() {
        let t = std::time::Instant::now();
        let r = run_scenario(&s, reps, seed)?;
        println!(
            "{:?} n={:<4} ok {}/{}  mean {:.3?}  median {:.3?}  sd {:.3?}  info-se {:.3?}  ({:.1?})",
            s.params.to_array(), s.n, r.successes, r.reps, r.mean, r.median, r.sd, r.mean_info_se, t.elapsed()
        );
    }
    Ok(())
}
