//! Monte Carlo study of the BG maximum-likelihood estimator.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::distribution::BGParams;
use crate::error::{Error, Result};
use crate::inference::{fit_mle, Dataset, FitOptions};
use crate::submodels::{ModelFamily, ModelSpec};

/// Share of failed replications above which a scenario is flagged.
pub const FAILURE_FLAG_RATE: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Scenario {
    pub params: BGParams,
    pub n: usize,
}

/// Per-parameter summary in (θ, γ, α, β) order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioSummary {
    pub scenario: Scenario,
    pub reps: usize,
    /// Replications whose fit converged; only these enter the averages.
    pub successes: usize,
    /// Replications whose observed information was not positive definite.
    pub missing_se: usize,
    pub mean: [f64; 4],
    /// Medians, robust to the occasional estimate far out on a ridge.
    pub median: [f64; 4],
    /// Empirical standard deviation of the estimates.
    pub sd: [f64; 4],
    /// Monte Carlo standard error of `mean`.
    pub mc_se: [f64; 4],
    /// Average of the information-matrix standard errors.
    pub mean_info_se: [f64; 4],
    pub flagged: bool,
}

/// The two parameter points used for the desk-scale study, each at
/// n = 30 and n = 100.
pub fn desk_scenarios() -> Vec<Scenario> {
    let points = [[0.5, 0.5, 0.5, 0.5], [0.5, 0.5, 2.0, 2.0]];
    let mut out = Vec::new();
    for p in points {
        for n in [30, 100] {
            out.push(Scenario {
                params: BGParams::from_array(p).expect("valid constants"),
                n,
            });
        }
    }
    out
}

struct Replication {
    estimate: Option<[f64; 4]>,
    se: Option<[f64; 4]>,
}

fn replicate(s: &Scenario, seed: u64, stream: u64) -> Result<Replication> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let data = Dataset::new(s.params.sample_with(s.n, &mut rng)?)?;
    let opts = FitOptions {
        extra_starts: vec![ModelSpec::from_full(ModelFamily::BG, s.params.to_array())?],
        ..FitOptions::default()
    };
    let fit = match fit_mle(&data, ModelFamily::BG, &opts) {
        Ok(f) if f.converged() => f,
        _ => {
            return Ok(Replication {
                estimate: None,
                se: None,
            })
        }
    };
    let se = fit
        .std_errors
        .as_ref()
        .map(|m| [m["theta"], m["gamma"], m["alpha"], m["beta"]]);
    Ok(Replication {
        estimate: Some(fit.estimate.full()),
        se,
    })
}

/// Runs `reps` replications of one scenario. Replication `r` draws its
/// sample from ChaCha stream `r` of `seed`, and each fit runs the default
/// start grid plus the true parameters. Results are aggregated in
/// replication order.
pub fn run_scenario(s: &Scenario, reps: usize, seed: u64) -> Result<ScenarioSummary> {
    if reps == 0 {
        return Err(Error::InvalidParameters("replications must be positive".into()));
    }
    s.params.validate()?;
    let runs: Vec<Replication> = (0..reps as u64)
        .into_par_iter()
        .map(|r| replicate(s, seed, r))
        .collect::<Result<_>>()?;
    let est: Vec<[f64; 4]> = runs.iter().filter_map(|r| r.estimate).collect();
    let ses: Vec<[f64; 4]> = runs.iter().filter_map(|r| r.se).collect();
    let k = est.len() as f64;
    let mut mean = [f64::NAN; 4];
    let mut median = [f64::NAN; 4];
    let mut sd = [f64::NAN; 4];
    let mut mc_se = [f64::NAN; 4];
    let mut mean_info_se = [f64::NAN; 4];
    for j in 0..4 {
        if !est.is_empty() {
            mean[j] = est.iter().map(|e| e[j]).sum::<f64>() / k;
            let mut col: Vec<f64> = est.iter().map(|e| e[j]).collect();
            col.sort_by(f64::total_cmp);
            let m = col.len() / 2;
            median[j] = if col.len() % 2 == 1 { col[m] } else { 0.5 * (col[m - 1] + col[m]) };
        }
        if est.len() > 1 {
            let ss: f64 = est.iter().map(|e| (e[j] - mean[j]).powi(2)).sum();
            sd[j] = (ss / (k - 1.0)).sqrt();
            mc_se[j] = sd[j] / k.sqrt();
        }
        if !ses.is_empty() {
            mean_info_se[j] = ses.iter().map(|e| e[j]).sum::<f64>() / ses.len() as f64;
        }
    }
    let failures = reps - est.len();
    Ok(ScenarioSummary {
        scenario: *s,
        reps,
        successes: est.len(),
        missing_se: est.len() - ses.len(),
        mean,
        median,
        sd,
        mc_se,
        mean_info_se,
        flagged: failures as f64 > FAILURE_FLAG_RATE * reps as f64,
    })
}

/// Runs every scenario with the same seed.
pub fn run_study(scenarios: &[Scenario], reps: usize, seed: u64) -> Result<Vec<ScenarioSummary>> {
    scenarios.iter().map(|s| run_scenario(s, reps, seed)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_replication_is_reproducible() {
        let s = desk_scenarios()[1];
        let a = run_scenario(&s, 1, 7).unwrap();
        let b = run_scenario(&s, 1, 7).unwrap();
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
        assert_eq!(a.reps, 1);
    }

    #[test]
    fn small_study_is_centred() {
        let s = Scenario {
            params: BGParams::new(0.5, 0.5, 2.0, 2.0).unwrap(),
            n: 200,
        };
        let r = run_scenario(&s, 40, 3).unwrap();
        assert!(r.successes >= 36);
        assert!(!r.flagged);
        assert!((r.median[2] - 2.0).abs() < 0.6, "{:?}", r.median);
    }
}
