use serde::{Deserialize, Serialize};

use crate::distribution::BGParams;
use crate::error::{domain, Result};
use crate::series::{sum_nested, sum_series, SeriesControl, SeriesSum};
use crate::specfun::{log_beta, log_gamma};

use super::expect;

/// E[X^k], k ≥ 1, by quadrature.
pub fn moment(k: u32, p: &BGParams) -> Result<f64> {
    if k == 0 {
        return Err(domain("moment", 0.0, "order must be at least 1"));
    }
    p.validate()?;
    expect(p, |vp| vp.x.powi(k as i32))
}

/// M_X(t) = E[e^{tX}] by quadrature. Finite for every real `t`.
pub fn mgf(t: f64, p: &BGParams) -> Result<f64> {
    Ok(1.0 + mgf_minus_one(t, p)?)
}

/// M_X(t) − 1 without the cancellation near t = 0.
pub(crate) fn mgf_minus_one(t: f64, p: &BGParams) -> Result<f64> {
    if !t.is_finite() {
        return Err(domain("mgf", t, "t must be finite"));
    }
    p.validate()?;
    expect(p, |vp| (t * vp.x).exp_m1())
}

/// How the undefined exponent in the printed moment series is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentReading {
    /// Exponent `s + 1` read as `k + 1`, bracket `[−1/(γ(k+1))]` as printed.
    Literal,
    /// Bracket indexed by the inner summation variable: `[−1/(γ(r+1))]^{k+1}`.
    CorrectedIndex,
}

/// Printed mixture series for E[X^k]:
/// `Σ_j p_j u_{jk} Σ_i Σ_r C(α+j−1, i) (−1)^{i+r}/r! e^{c_i} c_i^r [·]^{k+1}`
/// with `u_{jk} = (α+j) θ k!` and `c_i = θ(i+1)/γ`.
///
/// Every nested sum uses `ctl`. The series is a formal expansion and the
/// value is reported as is; it is not a substitute for [`moment`].
pub fn moment_series(
    k: u32,
    p: &BGParams,
    ctl: &SeriesControl,
    reading: MomentReading,
) -> Result<SeriesSum> {
    if k == 0 {
        return Err(domain("moment_series", 0.0, "order must be at least 1"));
    }
    p.validate()?;
    let inv_b = (-log_beta(p.alpha, p.beta)?).exp();
    let kf = k as f64;
    let k_fact = log_gamma(kf + 1.0)?.exp();
    let literal_bracket = (-1.0 / (p.gamma * (kf + 1.0))).powi(k as i32 + 1);
    let mut w = 1.0;
    Ok(sum_nested(ctl, |j| {
        if j > 0 {
            w *= (j as f64 - p.beta) / j as f64;
            if w == 0.0 {
                return None;
            }
        }
        let a = p.alpha + j as f64;
        let front = w * inv_b / a * a * p.theta * k_fact;
        let mut binom = 1.0;
        let mut inner = sum_nested(ctl, |i| {
            if i > 0 {
                binom *= -(a - 1.0 - (i - 1) as f64) / i as f64;
                if binom == 0.0 {
                    return None;
                }
            }
            let c = p.theta * (i as f64 + 1.0) / p.gamma;
            let ln_c = c.ln();
            let r_sum = sum_series(ctl, |r| {
                let rf = r as f64;
                let ln_mag = c + rf * ln_c - crate::specfun::log_gamma(rf + 1.0).ok()?;
                let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
                let bracket = match reading {
                    MomentReading::Literal => literal_bracket,
                    MomentReading::CorrectedIndex => {
                        (-1.0 / (p.gamma * (rf + 1.0))).powi(k as i32 + 1)
                    }
                };
                Some(sign * ln_mag.exp() * bracket)
            });
            Some(SeriesSum {
                value: binom * r_sum.value,
                ..r_sum
            })
        });
        inner.value *= front;
        Some(inner)
    }))
}

/// Printed mixture series for M_X(t):
/// `Σ_j p_j ((α+j)θ/γ) Σ_i Σ_k (−1)^i C(α+j−1, i) C(t/γ, k) k! / c_i^{k+1}`
/// with `c_i = (i+1)θ/γ`.
///
/// The k-sum is an asymptotic expansion; it terminates, and is then exact,
/// when `t/γ` is a non-negative integer.
pub fn mgf_series(t: f64, p: &BGParams, ctl: &SeriesControl) -> Result<SeriesSum> {
    if !t.is_finite() {
        return Err(domain("mgf_series", t, "t must be finite"));
    }
    p.validate()?;
    let inv_b = (-log_beta(p.alpha, p.beta)?).exp();
    let tg = t / p.gamma;
    let mut w = 1.0;
    Ok(sum_nested(ctl, |j| {
        if j > 0 {
            w *= (j as f64 - p.beta) / j as f64;
            if w == 0.0 {
                return None;
            }
        }
        let a = p.alpha + j as f64;
        let front = w * inv_b / a * a * p.theta / p.gamma;
        let mut binom = 1.0;
        let mut inner = sum_nested(ctl, |i| {
            if i > 0 {
                binom *= -(a - 1.0 - (i - 1) as f64) / i as f64;
                if binom == 0.0 {
                    return None;
                }
            }
            let c = (i as f64 + 1.0) * p.theta / p.gamma;
            let mut term = 1.0 / c;
            let k_sum = sum_series(ctl, |k| {
                if k > 0 {
                    term *= (tg - (k - 1) as f64) / c;
                    if term == 0.0 {
                        return None;
                    }
                }
                Some(term)
            });
            Some(SeriesSum {
                value: binom * k_sum.value,
                ..k_sum
            })
        });
        inner.value *= front;
        Some(inner)
    }))
}
