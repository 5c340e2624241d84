use crate::distribution::BGParams;
use crate::error::{domain, Result};
use crate::series::{sum_nested, sum_series, SeriesControl, SeriesSum};
use crate::specfun::{inc_beta_parts, log_beta, log_gamma};

use super::{expect, mixture_weights, power_series_pow};

fn check_indices(function: &'static str, i: usize, n: usize) -> Result<()> {
    if i >= 1 && i <= n {
        Ok(())
    } else {
        Err(domain(function, i as f64, "need 1 <= i <= n"))
    }
}

/// Density of the i-th order statistic out of n,
/// `f(x) F(x)^{i−1} (1 − F(x))^{n−i} / B(i, n−i+1)`.
///
/// This is the factored form of the finite binomial sum
/// `Σ_m (−1)^m C(n−i, m) f F^{i+m−1} / B(i, n−i+1)`; it avoids the alternating
/// cancellation of that sum for large `n − i`.
pub fn order_stat_pdf(x: f64, i: usize, n: usize, p: &BGParams) -> Result<f64> {
    check_indices("order_stat_pdf", i, n)?;
    if !(x >= 0.0) {
        return Err(domain("order_stat_pdf", x, "support is [0, inf)"));
    }
    let lp = p.log_pdf(x)?;
    let h = p.baseline_cumhaz(x);
    let t = inc_beta_parts(-(-h).exp_m1(), (-h).exp(), p.alpha, p.beta)?;
    let mut ln = lp - log_beta(i as f64, (n - i + 1) as f64)?;
    if i > 1 {
        ln += (i - 1) as f64 * t.ln_lower;
    }
    if n > i {
        ln += (n - i) as f64 * t.ln_upper;
    }
    Ok(if ln.is_nan() { 0.0 } else { ln.exp() })
}

/// Distribution function of the i-th order statistic, `I_{F(x)}(i, n−i+1)`.
pub fn order_stat_cdf(x: f64, i: usize, n: usize, p: &BGParams) -> Result<f64> {
    check_indices("order_stat_cdf", i, n)?;
    if !(x >= 0.0) {
        return Err(domain("order_stat_cdf", x, "support is [0, inf)"));
    }
    let h = p.baseline_cumhaz(x);
    let t = inc_beta_parts(-(-h).exp_m1(), (-h).exp(), p.alpha, p.beta)?;
    Ok(inc_beta_parts(t.lower, t.upper, i as f64, (n - i + 1) as f64)?.lower)
}

/// E[X_{i:n}^s] by quadrature.
pub fn order_stat_moment(s: u32, i: usize, n: usize, p: &BGParams) -> Result<f64> {
    check_indices("order_stat_moment", i, n)?;
    if s == 0 {
        return Err(domain("order_stat_moment", 0.0, "order must be at least 1"));
    }
    let lb = log_beta(i as f64, (n - i + 1) as f64)?;
    let (a, b) = (p.alpha, p.beta);
    expect(p, |vp| {
        let t = match inc_beta_parts(vp.v, vp.vc, a, b) {
            Ok(t) => t,
            Err(_) => return f64::NAN,
        };
        let mut ln = -lb;
        if i > 1 {
            ln += (i - 1) as f64 * t.ln_lower;
        }
        if n > i {
            ln += (n - i) as f64 * t.ln_upper;
        }
        vp.x.powi(s as i32) * ln.exp()
    })
}

/// The printed triple series for E[X_{i:n}^s], built from the cdf power
/// coefficients `c_{i+m,r}` of `F = Σ b_r G^r`:
///
/// `1/B(i,n−i+1) Σ_m Σ_{r≥1} (−1)^m r c_{i+m,r}/(m+i) · θ Γ(s+1)
///  Σ_{i1} Σ_{i2} C(r−1,i1) (−1)^{i1+i2}/i2! e^{c} c^{i2} [−1/(γ(i2+1))]^{s+1}`,
/// `c = θ(i1+1)/γ`.
///
/// The `b_r` come from [`mixture_weights`] with `ctl.max_terms` weights and
/// the r-sum runs over the available coefficients. A diagnostic only.
pub fn order_stat_moment_series(
    s: u32,
    i: usize,
    n: usize,
    p: &BGParams,
    ctl: &SeriesControl,
) -> Result<SeriesSum> {
    check_indices("order_stat_moment_series", i, n)?;
    if s == 0 {
        return Err(domain("order_stat_moment_series", 0.0, "order must be at least 1"));
    }
    let mix = mixture_weights(p.alpha, p.beta, ctl.max_terms)?;
    let r_max = mix.b.len().saturating_sub(1).max(1);
    let pows = power_series_pow(&mix.b, n, r_max)?;
    let inv_b = (-log_beta(i as f64, (n - i + 1) as f64)?).exp();
    let s_fact = log_gamma(s as f64 + 1.0)?.exp();
    let mut converged = mix.converged;
    let mut total = 0.0;
    let mut terms = 0;
    let mut last = 0.0;
    for m in 0..=(n - i) {
        let sign_m = if m % 2 == 0 { 1.0 } else { -1.0 };
        let c_row = pows.coeffs(i + m);
        for r in 1..=r_max {
            let crm = c_row[r];
            if crm == 0.0 {
                continue;
            }
            let mut binom = 1.0;
            let inner = sum_nested(ctl, |i1| {
                if i1 > 0 {
                    binom *= -((r - 1) as f64 - (i1 - 1) as f64) / i1 as f64;
                    if binom == 0.0 {
                        return None;
                    }
                }
                let c = p.theta * (i1 as f64 + 1.0) / p.gamma;
                let ln_c = c.ln();
                let r_sum = sum_series(ctl, |i2| {
                    let f2 = i2 as f64;
                    let ln_mag = c + f2 * ln_c - log_gamma(f2 + 1.0).ok()?;
                    let sign = if i2 % 2 == 0 { 1.0 } else { -1.0 };
                    let bracket = (-1.0 / (p.gamma * (f2 + 1.0))).powi(s as i32 + 1);
                    Some(sign * ln_mag.exp() * bracket)
                });
                Some(SeriesSum {
                    value: binom * r_sum.value,
                    ..r_sum
                })
            });
            converged &= inner.converged;
            terms += inner.terms;
            let t = inv_b * sign_m * r as f64 * crm / (m + i) as f64
                * p.theta
                * s_fact
                * inner.value;
            last = t;
            total += t;
        }
    }
    Ok(SeriesSum {
        value: total,
        terms,
        converged: converged && total.is_finite(),
        last_term: last,
    })
}
