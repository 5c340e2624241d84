//! Scalar special functions used throughout the crate.
//!
//! | Function | Description |
//! |----------|-------------|
//! | [`log_gamma`] | ln Γ(x) for x > 0 |
//! | [`log_beta`] | ln B(a,b) |
//! | [`digamma`], [`trigamma`] | ψ(x), ψ′(x) |
//! | [`reg_inc_beta`], [`inv_reg_inc_beta`] | I_y(a,b) and its inverse in y |
//! | [`gauss_2f1`] | ₂F₁(a,b;c;z) on 0 ≤ z < 1 |
//! | [`reg_inc_gamma_upper`] | Q(s,x) = Γ(s,x)/Γ(s) |
//! | [`kolmogorov_sf`] | asymptotic Kolmogorov distribution tail |
//!
//! All functions are pure and thread-safe.

mod beta;
mod gamma;
mod hypergeometric;
mod kolmogorov;

pub use beta::{inv_reg_inc_beta, log_beta, reg_inc_beta};
pub(crate) use beta::{beta_quantile_pair, inc_beta_parts, IncBeta};
pub use gamma::{digamma, log_gamma, reg_inc_gamma_upper, trigamma};
pub use hypergeometric::gauss_2f1;
pub use kolmogorov::kolmogorov_sf;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Absolute and relative accuracy targets for iterative evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Accuracy {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Default for Accuracy {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
        }
    }
}

impl Accuracy {
    pub fn new(abs_tol: f64, rel_tol: f64) -> crate::Result<Self> {
        if abs_tol > 0.0 && rel_tol > 0.0 {
            Ok(Self { abs_tol, rel_tol })
        } else {
            Err(crate::Error::InvalidParameters(
                "accuracy tolerances must be strictly positive".into(),
            ))
        }
    }
}
