//! Analytic structure of the BG distribution: mixture and hypergeometric
//! representations, moments, the moment generating function, order
//! statistics, quantile shape measures and entropies.
//!
//! Expectations are evaluated by quadrature over `v = G(x)`, which follows a
//! Beta(α, β) law, so every integral lives on `[0, 1]` and the endpoint
//! behaviour of the integrand is the beta kernel's. The series
//! representations are provided alongside and compared against these values
//! in [`diagnostics`].

pub mod diagnostics;
mod entropy;
mod mixture;
mod moments;
mod order_stats;
mod power_series;
mod shape;

pub use entropy::{renyi_entropy, renyi_series_printed, shannon_entropy};
pub use mixture::{
    cdf_hypergeometric, cdf_series, mixture_weights, pdf_series, MixtureCoefficients,
};
pub use moments::{mgf, mgf_series, moment, moment_series, MomentReading};
pub use order_stats::{
    order_stat_cdf, order_stat_moment, order_stat_moment_series, order_stat_pdf,
};
pub use power_series::{power_series_pow, PowerSeriesPow};
pub use shape::{bowley_skewness, moors_kurtosis};

use crate::distribution::BGParams;
use crate::error::Result;
use crate::quadrature::{Point, Quadrature};
use crate::specfun::log_beta;

/// A point of the `v = G(x)` substitution.
#[derive(Debug, Clone, Copy)]
pub(crate) struct VPoint {
    pub v: f64,
    /// 1 − v, exact.
    pub vc: f64,
    /// Baseline cumulative hazard −ln(1 − v).
    pub cumhaz: f64,
    pub x: f64,
}

impl VPoint {
    fn new(p: &BGParams, pt: Point) -> Self {
        let v = pt.from_left;
        let vc = pt.from_right;
        let cumhaz = if v < 0.5 { -(-v).ln_1p() } else { -vc.ln() };
        Self {
            v,
            vc,
            cumhaz,
            x: p.baseline_inverse(cumhaz),
        }
    }

    /// ln f(x) written in terms of v, free of the cancellation in `1 − G(x)`.
    pub fn log_pdf(&self, p: &BGParams, ln_beta_fn: f64) -> f64 {
        p.theta.ln() + (p.gamma * self.cumhaz / p.theta).ln_1p() - p.beta * self.cumhaz
            - ln_beta_fn
            + (p.alpha - 1.0) * self.v.ln()
    }
}

fn expectation_quadrature() -> Quadrature {
    Quadrature::with_tolerance(1e-14, 1e-12)
}

/// E[h(X)] for X ~ BG(p), integrating against the Beta(α, β) density of
/// `G(X)`.
pub(crate) fn expect<H>(p: &BGParams, h: H) -> Result<f64>
where
    H: Fn(&VPoint) -> f64,
{
    let lb = log_beta(p.alpha, p.beta)?;
    let integrand = |pt: Point| {
        let vp = VPoint::new(p, pt);
        let ln_w = (p.alpha - 1.0) * vp.v.ln() + (p.beta - 1.0) * vp.vc.ln() - lb;
        let w = ln_w.exp();
        if w == 0.0 {
            return 0.0;
        }
        h(&vp) * w
    };
    Ok(expectation_quadrature()
        .integrate_pieces(integrand, &[0.0, 0.5, 1.0])?
        .value)
}

/// E[exp(ln_h(X))] for a positive integrand given in log form; the log of
/// the beta weight is added before exponentiating so that large and small
/// factors cannot overflow separately.
pub(crate) fn expect_log<H>(p: &BGParams, ln_h: H) -> Result<f64>
where
    H: Fn(&VPoint, f64) -> f64,
{
    let lb = log_beta(p.alpha, p.beta)?;
    let integrand = |pt: Point| {
        let vp = VPoint::new(p, pt);
        let ln_w = (p.alpha - 1.0) * vp.v.ln() + (p.beta - 1.0) * vp.vc.ln() - lb;
        (ln_h(&vp, lb) + ln_w).exp()
    };
    Ok(expectation_quadrature()
        .integrate_pieces(integrand, &[0.0, 0.5, 1.0])?
        .value)
}

/// Generalized binomial coefficient C(x, k).
pub(crate) fn binom(x: f64, k: usize) -> f64 {
    let mut c = 1.0;
    for m in 0..k {
        c *= (x - m as f64) / (m as f64 + 1.0);
    }
    c
}
