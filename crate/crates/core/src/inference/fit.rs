use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::moment;
use crate::distribution::BGParams;
use crate::error::{Error, Result};
use crate::submodels::{ModelFamily, ModelSpec, Param};

use super::likelihood::kernel_derivatives;
use super::optimize::{maximize, Evaluation, FitStatus, LocalMax};
use super::{family_log_likelihood, Dataset};

/// Smallest sample accepted by [`fit_mle`].
pub const MIN_FIT_SIZE: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitOptions {
    /// Newton iterations per start.
    pub max_iterations: usize,
    /// Convergence threshold on the sup-norm of the log-space gradient.
    pub gradient_tol: f64,
    /// Whether to run the built-in start grid.
    pub grid: bool,
    /// Starting points tried after the built-in grid.
    pub extra_starts: Vec<ModelSpec>,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self {
            max_iterations: 500,
            gradient_tol: 1e-8,
            grid: true,
            extra_starts: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FitResult {
    pub family: ModelFamily,
    pub estimate: ModelSpec,
    pub loglik: f64,
    pub n: usize,
    /// Negative Hessian over the free parameters, in `free_params()` order.
    /// Empty when it could not be evaluated at the estimate.
    pub observed_info: Vec<Vec<f64>>,
    /// Absent when the observed information is not positive definite.
    pub std_errors: Option<BTreeMap<&'static str, f64>>,
    pub status: FitStatus,
    pub n_restarts_used: usize,
    pub starts_converged: usize,
    pub iterations: usize,
    /// Sup-norm of the log-space gradient at the estimate.
    pub gradient_norm: f64,
}

impl FitResult {
    pub fn converged(&self) -> bool {
        self.status.is_converged()
    }

    /// The estimate as BG parameters, for the families that embed exactly.
    pub fn bg_params(&self) -> Option<BGParams> {
        self.family
            .has_gamma()
            .then(|| BGParams::from_array(self.estimate.full()).ok())
            .flatten()
    }
}

/// Standard errors from a fit, `sqrt(diag(J⁻¹))` in the original
/// parameterization.
pub fn std_errors(f: &FitResult) -> Option<BTreeMap<&'static str, f64>> {
    let k = f.observed_info.len();
    if k == 0 {
        return None;
    }
    let j = DMatrix::from_fn(k, k, |r, c| f.observed_info[r][c]);
    let se = std_errors_from(&j)?;
    Some(
        f.family
            .free_params()
            .iter()
            .zip(se.iter())
            .map(|(p, s)| (p.name(), *s))
            .collect(),
    )
}

fn std_errors_from(j: &DMatrix<f64>) -> Option<DVector<f64>> {
    let k = j.nrows();
    let d = j.diagonal();
    if d.iter().any(|v| !(*v > 0.0 && v.is_finite())) {
        return None;
    }
    let s = d.map(|v| 1.0 / v.sqrt());
    let scaled = DMatrix::from_fn(k, k, |r, c| j[(r, c)] * s[r] * s[c]);
    let inv = scaled.cholesky()?.inverse();
    let se = DVector::from_fn(k, |i, _| inv[(i, i)].sqrt() * s[i]);
    se.iter().all(|v| v.is_finite()).then_some(se)
}

fn check_fit_data(d: &Dataset) -> Result<()> {
    if d.n() < MIN_FIT_SIZE {
        return Err(Error::InvalidData(format!(
            "fitting needs at least {MIN_FIT_SIZE} observations, got {}",
            d.n()
        )));
    }
    if d.values.first() == d.values.last() {
        return Err(Error::DegenerateData(d.n()));
    }
    Ok(())
}

fn gompertz_cv(c: f64) -> Result<(f64, f64)> {
    let p = BGParams::new(c, 1.0, 1.0, 1.0)?;
    let m1 = moment(1, &p)?;
    let m2 = moment(2, &p)?;
    Ok(((m2 - m1 * m1).max(0.0).sqrt() / m1, m1))
}

/// Moment-matched (θ, γ) seed for a Gompertz baseline. `γX` is distributed
/// as `ln(1 + E/c)` with `E ~ Exp(1)` and `c = θ/γ`, whose coefficient of
/// variation increases from 0 to 1 with c; c is found by bisection and γ
/// then matches the mean.
pub fn gompertz_seed(d: &Dataset) -> Result<(f64, f64)> {
    let mean = d.mean();
    let cv = d.variance().sqrt() / mean;
    if cv >= 0.99 {
        return Ok((1.0 / mean, 1.0 / mean));
    }
    let (mut lo, mut hi) = (-20.0f64, 20.0f64);
    for _ in 0..50 {
        let mid = 0.5 * (lo + hi);
        if gompertz_cv(mid.exp())?.0 < cv {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let c = (0.5 * (lo + hi)).exp();
    let m1 = gompertz_cv(c)?.1;
    let gamma = m1 / mean;
    Ok((c * gamma, gamma))
}

const SCALE_MULTIPLIERS: [f64; 3] = [0.5, 1.0, 2.0];
const SHAPE_STARTS: [f64; 3] = [0.3, 1.0, 3.0];

/// The deterministic start grid: {0.5, 1, 2} times the baseline seed
/// crossed with {0.3, 1, 3} for each free shape parameter.
pub fn starting_points(d: &Dataset, family: ModelFamily) -> Result<Vec<ModelSpec>> {
    let (theta0, gamma0) = if family.has_gamma() {
        gompertz_seed(d)?
    } else {
        (1.0 / d.mean(), 0.0)
    };
    let free = family.free_params();
    let alphas: &[f64] = if free.contains(&Param::Alpha) { &SHAPE_STARTS } else { &[1.0] };
    let betas: &[f64] = if free.contains(&Param::Beta) { &SHAPE_STARTS } else { &[1.0] };
    let mut out = Vec::new();
    for m in SCALE_MULTIPLIERS {
        for &a in alphas {
            for &b in betas {
                out.push(ModelSpec::from_full(
                    family,
                    [m * theta0, m * gamma0.max(f64::MIN_POSITIVE), a, b],
                )?);
            }
        }
    }
    Ok(out)
}

/// Log-likelihood, gradient and Hessian with respect to the logs of the
/// free parameters.
fn log_space_eval(data: &[f64], family: ModelFamily, phi: &DVector<f64>, full: bool) -> Result<Evaluation> {
    let spec = ModelSpec::new(family, phi.iter().map(|v| v.exp()).collect())?;
    if !full {
        let v = family_log_likelihood(data, &spec)?;
        return Ok((v, DVector::zeros(0), DMatrix::zeros(0, 0)));
    }
    let der = kernel_derivatives(data, &spec.kernel(), true)?;
    let idx: Vec<usize> = family.free_params().iter().map(|p| p.index()).collect();
    let k = idx.len();
    let p = DVector::from_vec(spec.values.clone());
    let g = DVector::from_fn(k, |i, _| der.grad[idx[i]] * p[i]);
    let h = DMatrix::from_fn(k, k, |r, c| {
        let mut v = der.hess[idx[r]][idx[c]] * p[r] * p[c];
        if r == c {
            v += g[r];
        }
        v
    });
    Ok((der.loglik, g, h))
}

/// Maximum-likelihood fit of `family` to `d` by multistart damped Newton
/// in log-parameter space. A fit where no start converges is returned with
/// its failure status rather than as an error.
pub fn fit_mle(d: &Dataset, family: ModelFamily, opts: &FitOptions) -> Result<FitResult> {
    check_fit_data(d)?;
    let mut starts = if opts.grid {
        starting_points(d, family)?
    } else {
        Vec::new()
    };
    for s in &opts.extra_starts {
        if s.family != family {
            return Err(Error::InvalidParameters(format!(
                "start for {} passed to a {family} fit",
                s.family
            )));
        }
        starts.push(s.clone());
    }
    if starts.is_empty() {
        return Err(Error::InvalidParameters("no starting points".into()));
    }
    let data = &d.values;
    let runs: Vec<LocalMax> = starts
        .par_iter()
        .map(|s| {
            let phi0 = DVector::from_iterator(s.values.len(), s.values.iter().map(|v| v.ln()));
            maximize(
                |phi, full| log_space_eval(data, family, phi, full),
                phi0,
                opts.gradient_tol,
                opts.max_iterations,
            )
        })
        .collect();
    let starts_converged = runs.iter().filter(|r| r.status.is_converged()).count();
    let pool: Vec<&LocalMax> = if starts_converged > 0 {
        runs.iter().filter(|r| r.status.is_converged()).collect()
    } else {
        runs.iter().collect()
    };
    let mut best = pool[0];
    for r in &pool[1..] {
        if r.value > best.value + 1e-9 || (!best.value.is_finite() && r.value.is_finite()) {
            best = r;
        }
    }
    let estimate = ModelSpec::new(family, best.phi.iter().map(|v| v.exp()).collect())?;
    let info = kernel_derivatives(data, &estimate.kernel(), true).ok().map(|der| {
        let idx: Vec<usize> = family.free_params().iter().map(|p| p.index()).collect();
        idx.iter()
            .map(|&r| idx.iter().map(|&c| -der.hess[r][c]).collect::<Vec<f64>>())
            .collect::<Vec<_>>()
    });
    let mut result = FitResult {
        family,
        estimate,
        loglik: best.value,
        n: d.n(),
        observed_info: info.unwrap_or_default(),
        std_errors: None,
        status: best.status,
        n_restarts_used: starts.len(),
        starts_converged,
        iterations: best.iterations,
        gradient_norm: best.grad_norm,
    };
    result.std_errors = std_errors(&result);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dataset(v: &[f64]) -> Dataset {
        Dataset::new(v.to_vec()).unwrap()
    }

    #[test]
    fn exponential_fit_is_closed_form() {
        let d = dataset(&[0.5, 1.2, 3.3, 0.1, 2.0, 0.7, 1.9]);
        let f = fit_mle(&d, ModelFamily::E, &FitOptions::default()).unwrap();
        assert!(f.converged());
        let theta = f.estimate.values[0];
        assert!((theta - 1.0 / d.mean()).abs() < 1e-10);
        let se = f.std_errors.unwrap()["theta"];
        assert!((se - theta / (d.n() as f64).sqrt()).abs() < 1e-10);
        assert_eq!(f.n_restarts_used, 3);
    }

    #[test]
    fn start_grid_sizes() {
        let d = dataset(&[0.5, 1.2, 3.3, 0.1, 2.0, 0.7, 1.9]);
        let sizes: Vec<usize> = ModelFamily::ALL
            .iter()
            .map(|f| starting_points(&d, *f).unwrap().len())
            .collect();
        assert_eq!(sizes, vec![3, 9, 27, 3, 9, 27]);
    }

    #[test]
    fn gompertz_seed_matches_moments() {
        let p = BGParams::new(0.2, 0.8, 1.0, 1.0).unwrap();
        let d = Dataset::new(p.sample(4000, 11).unwrap()).unwrap();
        let (theta, gamma) = gompertz_seed(&d).unwrap();
        assert!((theta / 0.2 - 1.0).abs() < 0.15, "{theta}");
        assert!((gamma / 0.8 - 1.0).abs() < 0.15, "{gamma}");
    }

    #[test]
    fn rejects_small_and_degenerate_data() {
        let opts = FitOptions::default();
        assert!(matches!(
            fit_mle(&dataset(&[1.0, 2.0]), ModelFamily::E, &opts),
            Err(Error::InvalidData(_))
        ));
        assert!(matches!(
            fit_mle(&dataset(&[2.0; 6]), ModelFamily::G, &opts),
            Err(Error::DegenerateData(6))
        ));
    }

    #[test]
    fn std_errors_absent_for_indefinite_information() {
        let j = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        assert!(std_errors_from(&j).is_none());
        let j = DMatrix::from_row_slice(2, 2, &[4.0, 0.0, 0.0, 1e8]);
        let se = std_errors_from(&j).unwrap();
        assert!((se[0] - 0.5).abs() < 1e-15 && (se[1] - 1e-4).abs() < 1e-18);
    }
}
