use serde::Serialize;

use crate::distribution::{ln_one_minus_exp_neg, BGParams};
use crate::error::{domain, Error, Result};
use crate::series::{sum_series, SeriesControl};
use crate::specfun::{gauss_2f1, log_beta};

use super::binom;

/// Largest number of `b_r` coefficients produced by [`mixture_weights`];
/// each needs a double sum, so the list is kept short.
const MAX_B_TERMS: usize = 200;

/// Weights of the generalized-Gompertz mixture `F = Σ p_j G^{α+j}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MixtureCoefficients {
    /// `p_j = (−1)^j Γ(α+β) / [Γ(α) Γ(β−j) Γ(j+1) (α+j)]`.
    pub p: Vec<f64>,
    /// Coefficients of `F = Σ b_r G^r`, with both inner sums truncated at the
    /// same budget. The underlying double series is only formally convergent.
    pub b: Vec<f64>,
    /// Binomial weights of `(1 − z)^{β−1} = Σ w_j z^j`.
    pub w: Vec<f64>,
    /// True when β is a positive integer and the expansion ended exactly.
    pub terminated: bool,
    /// |p_j| of the last computed weight.
    pub tail: f64,
    /// False when the weights had not decayed below 1e-12 within the budget.
    pub converged: bool,
}

/// First `k` mixture weights for shapes (α, β).
pub fn mixture_weights(alpha: f64, beta: f64, k: usize) -> Result<MixtureCoefficients> {
    if !(alpha > 0.0 && beta > 0.0) {
        return Err(Error::InvalidParameters(format!(
            "shapes must be positive (alpha={alpha}, beta={beta})"
        )));
    }
    if k == 0 {
        return Err(domain("mixture_weights", 0.0, "need at least one term"));
    }
    let inv_b = (-log_beta(alpha, beta)?).exp();
    let mut w = Vec::with_capacity(k.min(4096));
    let mut cur = 1.0;
    let mut terminated = false;
    for j in 0..k {
        if j > 0 {
            cur *= (j as f64 - beta) / j as f64;
            if cur == 0.0 {
                terminated = true;
                break;
            }
        }
        w.push(cur);
    }
    let p: Vec<f64> = w
        .iter()
        .enumerate()
        .map(|(j, wj)| wj * inv_b / (alpha + j as f64))
        .collect();

    let nb = p.len().min(MAX_B_TERMS);
    let inner = k.min(MAX_B_TERMS);
    let b = (0..nb)
        .map(|r| {
            p.iter()
                .take(MAX_B_TERMS)
                .enumerate()
                .map(|(j, pj)| {
                    let a = alpha + j as f64;
                    // Σ_{k≥r} (−1)^{k+r} C(a,k) C(k,r) = C(a,r) Σ_m (−1)^m C(a−r,m)
                    let mut t = 1.0;
                    let mut s = 1.0;
                    for m in 1..inner {
                        t *= -(a - r as f64 - (m - 1) as f64) / m as f64;
                        s += t;
                    }
                    pj * binom(a, r) * s
                })
                .sum()
        })
        .collect();

    let tail = p.last().map_or(0.0, |v| v.abs());
    Ok(MixtureCoefficients {
        converged: terminated || tail < 1e-12,
        p,
        b,
        w,
        terminated,
        tail,
    })
}

/// (ln G(x), ln g(x)) for the Gompertz baseline.
fn baseline_logs(x: f64, p: &BGParams) -> (f64, f64) {
    let h = p.baseline_cumhaz(x);
    let ln_g_cdf = if h == 0.0 {
        f64::NEG_INFINITY
    } else {
        ln_one_minus_exp_neg(h)
    };
    (ln_g_cdf, p.theta.ln() + p.gamma * x - h)
}

/// `Σ_j w_j G^j`, the expansion of `(1 − G)^{β−1}`, optionally divided by
/// `α + j`.
fn weighted_power_sum(
    g: f64,
    alpha: f64,
    beta: f64,
    divide: bool,
    ctl: &SeriesControl,
    function: &'static str,
) -> Result<f64> {
    let mut w = 1.0;
    let mut gj = 1.0;
    sum_series(ctl, |j| {
        if j > 0 {
            w *= (j as f64 - beta) / j as f64;
            gj *= g;
            if w == 0.0 || gj == 0.0 {
                return None;
            }
        }
        let t = w * gj;
        Some(if divide { t / (alpha + j as f64) } else { t })
    })
    .into_result(function)
}

/// F(x) from the mixture `Σ_j p_j G(x)^{α+j}`.
pub fn cdf_series(x: f64, p: &BGParams, ctl: &SeriesControl) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(domain("cdf_series", x, "support is [0, inf)"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let (ln_g, _) = baseline_logs(x, p);
    let lb = log_beta(p.alpha, p.beta)?;
    let s = weighted_power_sum(ln_g.exp(), p.alpha, p.beta, true, ctl, "cdf_series")?;
    Ok((p.alpha * ln_g - lb).exp() * s)
}

/// f(x) from the mixture `Σ_j p_j (α+j) g(x) G(x)^{α+j−1}`.
pub fn pdf_series(x: f64, p: &BGParams, ctl: &SeriesControl) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(domain("pdf_series", x, "support is [0, inf)"));
    }
    let (ln_g, ln_dens) = baseline_logs(x, p);
    let lb = log_beta(p.alpha, p.beta)?;
    let s = weighted_power_sum(ln_g.exp(), p.alpha, p.beta, false, ctl, "pdf_series")?;
    let front = if p.alpha == 1.0 {
        ln_dens - lb
    } else {
        ln_dens + (p.alpha - 1.0) * ln_g - lb
    };
    Ok(front.exp() * s)
}

/// `F(x) = G^α / (α B(α,β)) · ₂F₁(α, 1−β; α+1; G)`.
pub fn cdf_hypergeometric(x: f64, p: &BGParams, ctl: &SeriesControl) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(domain("cdf_hypergeometric", x, "support is [0, inf)"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let (ln_g, _) = baseline_logs(x, p);
    let g = ln_g.exp();
    if g >= 1.0 {
        return Err(domain(
            "cdf_hypergeometric",
            x,
            "G(x) rounds to 1; the series diverges",
        ));
    }
    let f21 = gauss_2f1(p.alpha, 1.0 - p.beta, p.alpha + 1.0, g, ctl)?;
    let lb = log_beta(p.alpha, p.beta)?;
    Ok((p.alpha * ln_g - lb).exp() / p.alpha * f21)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(theta: f64, gamma: f64, alpha: f64, beta: f64) -> BGParams {
        BGParams::new(theta, gamma, alpha, beta).unwrap()
    }

    #[test]
    fn unit_beta_is_single_component() {
        let m = mixture_weights(1.7, 1.0, 50).unwrap();
        assert_eq!(m.p.len(), 1);
        assert!((m.p[0] - 1.0).abs() < 1e-14);
        assert!(m.terminated && m.converged);
    }

    #[test]
    fn hand_evaluated_weights() {
        let m = mixture_weights(1.0, 2.0, 10).unwrap();
        assert_eq!(m.p.len(), 2);
        assert!((m.p[0] - 2.0).abs() < 1e-14);
        assert!((m.p[1] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn weights_match_gamma_formula() {
        use crate::specfun::log_gamma;
        let (a, b) = (0.7, 2.4);
        let m = mixture_weights(a, b, 6).unwrap();
        for (j, pj) in m.p.iter().enumerate() {
            let jf = j as f64;
            // Γ(β−j) changes sign for β−j < 0; track it by hand.
            let arg = b - jf;
            let (ln_abs, sign) = if arg > 0.0 {
                (log_gamma(arg).unwrap(), 1.0)
            } else {
                let refl = std::f64::consts::PI / (std::f64::consts::PI * arg).sin();
                (
                    refl.abs().ln() - log_gamma(1.0 - arg).unwrap(),
                    refl.signum(),
                )
            };
            let mag = (log_gamma(a + b).unwrap()
                - log_gamma(a).unwrap()
                - ln_abs
                - log_gamma(jf + 1.0).unwrap())
            .exp()
                / (a + jf);
            let expected = if j % 2 == 0 { 1.0 } else { -1.0 } * sign * mag;
            assert!((pj - expected).abs() < 1e-12 * expected.abs().max(1.0), "j={j}");
        }
    }

    #[test]
    fn weights_sum_to_one() {
        let m = mixture_weights(0.8, 2.5, 20_000).unwrap();
        let s: f64 = m.p.iter().sum();
        assert!((s - 1.0).abs() < 1e-4, "{s}");
    }

    #[test]
    fn series_match_closed_forms() {
        let ctl = SeriesControl::default();
        let p = params(0.5, 0.5, 1.5, 2.5);
        let x = 1.0;
        assert!((cdf_series(x, &p, &ctl).unwrap() - p.cdf(x).unwrap()).abs() < 1e-10);
        let q = params(1.0, 0.5, 2.0, 2.0);
        assert!((pdf_series(0.7, &q, &ctl).unwrap() - q.pdf(0.7).unwrap()).abs() < 1e-10);
        let r = params(1.0, 1.0, 2.0, 3.0);
        let h = cdf_hypergeometric(1.2, &r, &ctl).unwrap();
        assert!((h - r.cdf(1.2).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn series_edge_cases() {
        let ctl = SeriesControl::default();
        let p = params(0.9, 0.4, 2.0, 0.6);
        assert_eq!(cdf_series(0.0, &p, &ctl).unwrap(), 0.0);
        assert_eq!(pdf_series(0.0, &p, &ctl).unwrap(), 0.0);
        assert_eq!(cdf_hypergeometric(0.0, &p, &ctl).unwrap(), 0.0);
        let u = params(0.3, 2.0, 1.0, 1.0);
        let g = crate::gompertz_cdf(0.8, 0.3, 2.0).unwrap();
        assert!((cdf_series(0.8, &u, &ctl).unwrap() - g).abs() < 1e-15);
        let gg = params(0.3, 2.0, 2.5, 1.0);
        let expected = g.powf(2.5);
        assert!((cdf_hypergeometric(0.8, &gg, &ctl).unwrap() - expected).abs() < 1e-14);
        assert!(cdf_series(-1.0, &u, &ctl).is_err());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let ctl = SeriesControl::new(20, 1e-12).unwrap();
        let p = params(1.0, 1.0, 0.5, 0.5);
        assert!(cdf_series(3.0, &p, &ctl).is_err());
        assert!(cdf_hypergeometric(3.0, &p, &ctl).is_err());
    }
}
