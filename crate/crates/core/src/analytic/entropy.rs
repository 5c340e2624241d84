use crate::distribution::BGParams;
use crate::error::{domain, Result};
use crate::series::{sum_series, SeriesControl, SeriesSum};
use crate::specfun::{digamma, log_beta};

use super::moments::mgf_minus_one;
use super::{expect_log, moment};

/// Shannon entropy
/// `ln(B(α,β)/θ) − θβ/γ − γE[X] + (θβ/γ) M_X(γ) + (α−1)[ψ(α+β) − ψ(α)]`,
/// with E[X] and M_X(γ) evaluated by quadrature.
pub fn shannon_entropy(p: &BGParams) -> Result<f64> {
    p.validate()?;
    let lb = log_beta(p.alpha, p.beta)?;
    let mean = moment(1, p)?;
    let m1 = mgf_minus_one(p.gamma, p)?;
    let tb = p.theta * p.beta / p.gamma;
    let shape = (p.alpha - 1.0) * (digamma(p.alpha + p.beta)? - digamma(p.alpha)?);
    Ok(lb - p.theta.ln() - p.gamma * mean + tb * m1 + shape)
}

/// Rényi entropy of order λ, `ln(∫ f^λ) / (1 − λ)`, by quadrature.
///
/// Near the origin `f(x) ~ x^{α−1}`, so the integral is finite only when
/// `λ(1 − α) < 1`; otherwise a domain error is returned.
pub fn renyi_entropy(lambda: f64, p: &BGParams) -> Result<f64> {
    if !(lambda > 0.0 && lambda.is_finite()) || lambda == 1.0 {
        return Err(domain("renyi_entropy", lambda, "order must be positive and != 1"));
    }
    p.validate()?;
    if lambda * (1.0 - p.alpha) >= 1.0 {
        return Err(domain(
            "renyi_entropy",
            lambda,
            "integral of f^lambda diverges at the origin (lambda(1 - alpha) >= 1)",
        ));
    }
    // ∫ f^λ dx = E[f(X)^{λ−1}]
    let integral = expect_log(p, |vp, lb| (lambda - 1.0) * vp.log_pdf(p, lb))?;
    Ok(integral.ln() / (1.0 - lambda))
}

/// The printed series form of the Rényi entropy,
///
/// `−ln θ + λ/(λ−1) ln B(α,β) + 1/(1−λ) [ln B(α, (β−1)λ+1) + ln S]`,
/// `S = Σ_{j≥1} Σ_{k=0..j} (−1)^k C(λ−1, j) C(j, k) (γ/θ)^j Γ(j+1) / (j+1)^{k−1+(β−1)λ}`.
///
/// With `include_j0` the sum starts at `j = 0` (that term equals 1). The
/// returned `value` is the entropy, NaN when a logarithm argument is not
/// positive; convergence refers to the j-sum.
pub fn renyi_series_printed(
    lambda: f64,
    p: &BGParams,
    ctl: &SeriesControl,
    include_j0: bool,
) -> Result<SeriesSum> {
    if !(lambda > 0.0 && lambda.is_finite()) || lambda == 1.0 {
        return Err(domain(
            "renyi_series_printed",
            lambda,
            "order must be positive and != 1",
        ));
    }
    p.validate()?;
    let ratio = p.gamma / p.theta;
    let expo = (p.beta - 1.0) * lambda;
    // falling factorial (λ−1)(λ−2)…(λ−j) · (γ/θ)^j
    let mut front = 1.0;
    let sum = sum_series(ctl, |j| {
        if j > 0 {
            front *= (lambda - j as f64) * ratio;
            if front == 0.0 {
                return None;
            }
        } else if !include_j0 {
            return Some(0.0);
        }
        let base = (j + 1) as f64;
        let mut binom = 1.0;
        let mut inner = 0.0;
        for k in 0..=j {
            if k > 0 {
                binom *= (j - k + 1) as f64 / k as f64;
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            inner += sign * binom * base.powf(-(k as f64 - 1.0 + expo));
        }
        Some(front * inner)
    });
    let b2 = expo + 1.0;
    let value = if sum.value > 0.0 && b2 > 0.0 {
        let lb = log_beta(p.alpha, p.beta)?;
        -p.theta.ln()
            + lambda / (lambda - 1.0) * lb
            + (log_beta(p.alpha, b2)? + sum.value.ln()) / (1.0 - lambda)
    } else {
        f64::NAN
    };
    Ok(SeriesSum { value, ..sum })
}
