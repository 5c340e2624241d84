//! Damped Newton maximization in log-parameter space.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Outcome of one local maximization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FitStatus {
    Converged,
    MaxIterations,
    LineSearchFailed,
    NonFinite,
    /// A log-parameter left [−LOG_BOUND, LOG_BOUND]; the supremum is
    /// approached on the boundary of the parameter space.
    Diverged,
    /// The objective rose by less than `STALL_GAIN` over `STALL_WINDOW`
    /// iterations without meeting the gradient test.
    Stalled,
}

impl FitStatus {
    pub fn is_converged(self) -> bool {
        self == FitStatus::Converged
    }
}

#[derive(Debug, Clone)]
pub(crate) struct LocalMax {
    pub phi: DVector<f64>,
    pub value: f64,
    pub grad_norm: f64,
    pub iterations: usize,
    pub status: FitStatus,
}

/// Value, gradient and Hessian of the objective at a point.
pub(crate) type Evaluation = (f64, DVector<f64>, DMatrix<f64>);

const MAX_STEP: f64 = 3.0;
const ARMIJO: f64 = 1e-4;
const MAX_HALVINGS: usize = 60;
/// Bound on |ln p| for every parameter.
pub const LOG_BOUND: f64 = 30.0;
pub const STALL_WINDOW: usize = 50;
pub const STALL_GAIN: f64 = 1e-6;

/// Maximizes `f` from `phi0`. Each iteration solves the Newton system for
/// `−∇²f`, shifting its diagonal until a Cholesky factorization succeeds,
/// then backtracks until the Armijo condition holds. Points where `f`
/// fails or is not finite count as −∞.
pub(crate) fn maximize<F>(f: F, phi0: DVector<f64>, grad_tol: f64, max_iter: usize) -> LocalMax
where
    F: Fn(&DVector<f64>, bool) -> Result<Evaluation>,
{
    let value_at = |phi: &DVector<f64>| match f(phi, false) {
        Ok((v, _, _)) if v.is_finite() => v,
        _ => f64::NEG_INFINITY,
    };
    let mut phi = phi0;
    let (mut value, mut grad, mut hess) = match f(&phi, true) {
        Ok(e) if e.0.is_finite() => e,
        _ => {
            return LocalMax {
                phi,
                value: f64::NEG_INFINITY,
                grad_norm: f64::INFINITY,
                iterations: 0,
                status: FitStatus::NonFinite,
            }
        }
    };
    let dim = phi.len();
    let mut history = Vec::with_capacity(max_iter.min(1024));
    for iter in 0..max_iter {
        let grad_norm = grad.amax();
        if grad_norm <= grad_tol {
            return LocalMax {
                phi,
                value,
                grad_norm,
                iterations: iter,
                status: FitStatus::Converged,
            };
        }
        history.push(value);
        if iter >= STALL_WINDOW && value - history[iter - STALL_WINDOW] < STALL_GAIN {
            return LocalMax {
                phi,
                value,
                grad_norm,
                iterations: iter,
                status: FitStatus::Stalled,
            };
        }
        let neg = -&hess;
        let scale = neg.diagonal().amax().max(1.0);
        let mut shift = 0.0;
        let mut dir = None;
        for _ in 0..60 {
            let m = &neg + DMatrix::identity(dim, dim) * shift;
            if let Some(ch) = m.cholesky() {
                dir = Some(ch.solve(&grad));
                break;
            }
            shift = if shift == 0.0 { 1e-8 * scale } else { shift * 10.0 };
        }
        let mut d = dir.unwrap_or_else(|| grad.clone() / scale);
        let big = d.amax();
        if big > MAX_STEP {
            d *= MAX_STEP / big;
        }
        let slope = grad.dot(&d);
        // Differences below this are rounding noise in the objective.
        let noise = 64.0 * f64::EPSILON * value.abs().max(1.0);
        let mut t = 1.0;
        let mut accepted = None;
        for _ in 0..MAX_HALVINGS {
            let trial = &phi + &d * t;
            let v = value_at(&trial);
            if v >= value + ARMIJO * t * slope || (t * slope <= noise && v >= value - noise) {
                accepted = Some(trial);
                break;
            }
            t *= 0.5;
        }
        let Some(next) = accepted else {
            return LocalMax {
                phi,
                value,
                grad_norm,
                iterations: iter,
                status: FitStatus::LineSearchFailed,
            };
        };
        if next.amax() > LOG_BOUND {
            return LocalMax {
                grad_norm,
                phi,
                value,
                iterations: iter + 1,
                status: FitStatus::Diverged,
            };
        }
        match f(&next, true) {
            Ok(e) if e.0.is_finite() && e.1.iter().all(|g| g.is_finite()) => {
                phi = next;
                (value, grad, hess) = e;
            }
            _ => {
                return LocalMax {
                    phi,
                    value,
                    grad_norm,
                    iterations: iter,
                    status: FitStatus::NonFinite,
                }
            }
        }
    }
    LocalMax {
        grad_norm: grad.amax(),
        phi,
        value,
        iterations: max_iter,
        status: FitStatus::MaxIterations,
    }
}
