use crate::error::{domain, Error, Result};

use super::gamma::log_gamma_unchecked;
use super::Accuracy;

/// ln B(a, b).
pub fn log_beta(a: f64, b: f64) -> Result<f64> {
    check_shape("log_beta", a)?;
    check_shape("log_beta", b)?;
    Ok(log_beta_unchecked(a, b))
}

pub(crate) fn log_beta_unchecked(a: f64, b: f64) -> f64 {
    // Argument order fixed so that B(a,b) and B(b,a) round identically.
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    log_gamma_unchecked(lo) + log_gamma_unchecked(hi) - log_gamma_unchecked(lo + hi)
}

fn check_shape(function: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(domain(function, v, "shape parameters must be positive and finite"))
    }
}

/// Both tails of the regularized incomplete beta function together with
/// their logarithms. Whichever tail is evaluated directly keeps full
/// relative accuracy; the other is its complement.
#[derive(Debug, Clone, Copy)]
pub(crate) struct IncBeta {
    pub lower: f64,
    pub upper: f64,
    pub ln_lower: f64,
    pub ln_upper: f64,
}

impl IncBeta {
    fn from_lower_log(ln_lower: f64) -> Self {
        let lower = ln_lower.exp();
        let upper = -ln_lower.exp_m1();
        Self {
            lower,
            upper,
            ln_lower,
            ln_upper: (-lower).ln_1p(),
        }
    }

    fn from_upper_log(ln_upper: f64) -> Self {
        let upper = ln_upper.exp();
        Self {
            lower: -ln_upper.exp_m1(),
            upper,
            ln_lower: (-upper).ln_1p(),
            ln_upper,
        }
    }
}

/// I_y(a,b) and 1 − I_y(a,b) given `y` and `ymc = 1 − y` (both exact).
pub(crate) fn inc_beta_parts(y: f64, ymc: f64, a: f64, b: f64) -> Result<IncBeta> {
    if y <= 0.0 {
        return Ok(IncBeta {
            lower: 0.0,
            upper: 1.0,
            ln_lower: f64::NEG_INFINITY,
            ln_upper: 0.0,
        });
    }
    if ymc <= 0.0 {
        return Ok(IncBeta {
            lower: 1.0,
            upper: 0.0,
            ln_lower: 0.0,
            ln_upper: f64::NEG_INFINITY,
        });
    }
    let ln_y = y.ln();
    let ln_ymc = ymc.ln();
    if a == 1.0 && b == 1.0 {
        return Ok(IncBeta {
            lower: y,
            upper: ymc,
            ln_lower: ln_y,
            ln_upper: ln_ymc,
        });
    }
    if b == 1.0 {
        return Ok(IncBeta::from_lower_log(a * ln_y));
    }
    if a == 1.0 {
        return Ok(IncBeta::from_upper_log(b * ln_ymc));
    }
    let ln_front = a * ln_y + b * ln_ymc - log_beta_unchecked(a, b);
    if y < (a + 1.0) / (a + b + 2.0) {
        let cf = continued_fraction(a, b, y, ymc)?;
        Ok(IncBeta::from_lower_log(ln_front + (cf / a).ln()))
    } else {
        let cf = continued_fraction(b, a, ymc, y)?;
        Ok(IncBeta::from_upper_log(ln_front + (cf / b).ln()))
    }
}

/// Modified Lentz evaluation of the incomplete beta continued fraction.
fn continued_fraction(a: f64, b: f64, x: f64, xmc: f64) -> Result<f64> {
    const MAX_ITER: usize = 10_000;
    const TINY: f64 = 1e-300;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    // 1 - qab*x/qap, written to avoid cancellation when x is near 1
    let mut d = (qap - qab * x) / qap;
    if (qap - qab * x).abs() < 0.5 * qap {
        d = (qap * xmc - (qab - qap) * x) / qap;
    }
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            return Ok(h);
        }
    }
    Err(Error::Convergence {
        function: "reg_inc_beta",
        iterations: MAX_ITER,
    })
}

/// Regularized incomplete beta function I_y(a, b).
pub fn reg_inc_beta(y: f64, a: f64, b: f64) -> Result<f64> {
    check_shape("reg_inc_beta", a)?;
    check_shape("reg_inc_beta", b)?;
    if !(0.0..=1.0).contains(&y) {
        return Err(domain("reg_inc_beta", y, "y must lie in [0, 1]"));
    }
    Ok(inc_beta_parts(y, 1.0 - y, a, b)?.lower)
}

/// Inverse of [`reg_inc_beta`] in its first argument.
pub fn inv_reg_inc_beta(p: f64, a: f64, b: f64) -> Result<f64> {
    check_shape("inv_reg_inc_beta", a)?;
    check_shape("inv_reg_inc_beta", b)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(domain("inv_reg_inc_beta", p, "p must lie in [0, 1]"));
    }
    Ok(beta_quantile_pair(p, 1.0 - p, a, b)?.0)
}

/// Returns `(y, 1 - y)` with `I_y(a,b) = p`, where `q = 1 - p` is supplied
/// separately so that upper-tail quantiles keep their relative accuracy.
pub(crate) fn beta_quantile_pair(p: f64, q: f64, a: f64, b: f64) -> Result<(f64, f64)> {
    if p <= 0.0 {
        return Ok((0.0, 1.0));
    }
    if q <= 0.0 {
        return Ok((1.0, 0.0));
    }
    if a == 1.0 && b == 1.0 {
        return Ok((p, q));
    }
    if b == 1.0 {
        let l = p.ln() / a;
        return Ok((l.exp(), -l.exp_m1()));
    }
    if a == 1.0 {
        let l = q.ln() / b;
        return Ok((-l.exp_m1(), l.exp()));
    }
    let (y, ymc) = if p <= q {
        let y = solve_lower_tail(p, a, b, initial_guess(p, a, b))?;
        if y > 0.5 {
            let w = solve_lower_tail(q, b, a, 1.0 - y)?;
            (1.0 - w, w)
        } else {
            (y, 1.0 - y)
        }
    } else {
        let w = solve_lower_tail(q, b, a, initial_guess(q, b, a))?;
        if w > 0.5 {
            let y = solve_lower_tail(p, a, b, 1.0 - w)?;
            (y, 1.0 - y)
        } else {
            (1.0 - w, w)
        }
    };
    Ok((y, ymc))
}

/// Starting point from the normal approximation (both shapes ≥ 1) or the
/// small-shape power-law tails otherwise.
fn initial_guess(p: f64, a: f64, b: f64) -> f64 {
    let guess = if a >= 1.0 && b >= 1.0 {
        let pp = if p < 0.5 { p } else { 1.0 - p };
        let t = (-2.0 * pp.ln()).sqrt();
        let mut x = (2.30753 + t * 0.27061) / (1.0 + t * (0.99229 + t * 0.04481)) - t;
        if p < 0.5 {
            x = -x;
        }
        let al = (x * x - 3.0) / 6.0;
        let h = 2.0 / (1.0 / (2.0 * a - 1.0) + 1.0 / (2.0 * b - 1.0));
        let w = x * (al + h).sqrt() / h
            - (1.0 / (2.0 * b - 1.0) - 1.0 / (2.0 * a - 1.0)) * (al + 5.0 / 6.0 - 2.0 / (3.0 * h));
        a / (a + b * (2.0 * w).exp())
    } else {
        let lna = (a / (a + b)).ln();
        let lnb = (b / (a + b)).ln();
        let t = (a * lna).exp() / a;
        let u = (b * lnb).exp() / b;
        let w = t + u;
        if p < t / w {
            (a * w * p).powf(1.0 / a)
        } else {
            1.0 - (b * w * (1.0 - p)).powf(1.0 / b)
        }
    };
    if guess > 0.0 && guess < 1.0 && guess.is_finite() {
        guess
    } else {
        0.5
    }
}

/// Solves I_y(a,b) = p for a lower-tail target p ≤ 1/2 by Newton iteration on
/// ln I against ln y, falling back to bisection whenever a step leaves the
/// current bracket.
fn solve_lower_tail(p: f64, a: f64, b: f64, start: f64) -> Result<f64> {
    const MAX_ITER: usize = 400;
    let acc = Accuracy::default();
    let ln_p = p.ln();
    let ln_b = log_beta_unchecked(a, b);
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    let mut y = start.clamp(f64::MIN_POSITIVE, 1.0 - f64::EPSILON);
    for _ in 0..MAX_ITER {
        let parts = inc_beta_parts(y, 1.0 - y, a, b)?;
        let g = parts.ln_lower - ln_p;
        if g == 0.0 {
            return Ok(y);
        }
        if g > 0.0 {
            hi = y;
        } else {
            lo = y;
        }
        if g.abs() <= 4.0 * f64::EPSILON {
            return Ok(y);
        }
        // d ln I / d ln y = y f(y) / I(y)
        let ln_slope = a * y.ln() + (b - 1.0) * (-y).ln_1p() - ln_b - parts.ln_lower;
        let step = g / ln_slope.exp();
        let mut next = y * (-step).exp();
        if !(next > lo && next < hi) || !next.is_finite() {
            next = if lo > 0.0 && hi / lo > 4.0 {
                (lo * hi).sqrt()
            } else if lo > 0.0 {
                0.5 * (lo + hi)
            } else {
                hi * 1e-4
            };
        }
        if (next - y).abs() <= 2.0 * f64::EPSILON * y || hi - lo <= 2.0 * f64::EPSILON * hi {
            let parts = inc_beta_parts(next, 1.0 - next, a, b)?;
            if (parts.lower - p).abs() <= acc.abs_tol {
                return Ok(next);
            }
            break;
        }
        y = next;
    }
    let parts = inc_beta_parts(y, 1.0 - y, a, b)?;
    if (parts.lower - p).abs() <= acc.abs_tol {
        return Ok(y);
    }
    Err(Error::Convergence {
        function: "inv_reg_inc_beta",
        iterations: MAX_ITER,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn log_beta_values() {
        assert!(log_beta(1.0, 1.0).unwrap().abs() < 1e-15);
        assert!((log_beta(2.0, 3.0).unwrap() - (1.0f64 / 12.0).ln()).abs() < 1e-14);
        assert!((log_beta(0.5, 0.5).unwrap() - PI.ln()).abs() < 1e-14);
        assert!(log_beta(0.0, 1.0).is_err());
        assert_eq!(log_beta(0.3, 7.1).unwrap(), log_beta(7.1, 0.3).unwrap());
    }

    #[test]
    fn inc_beta_closed_cases() {
        for &y in &[0.0, 0.1, 0.37, 0.5, 0.99, 1.0] {
            assert!((reg_inc_beta(y, 1.0, 1.0).unwrap() - y).abs() < 1e-15);
        }
        assert!((reg_inc_beta(0.5, 2.0, 2.0).unwrap() - 0.5).abs() < 1e-15);
        // I_y(2,2) = 3y^2 - 2y^3
        for &y in &[0.05, 0.3, 0.7, 0.95] {
            let exact = 3.0 * y * y - 2.0 * y * y * y;
            assert!((reg_inc_beta(y, 2.0, 2.0).unwrap() - exact).abs() < 1e-14);
        }
        assert_eq!(reg_inc_beta(0.0, 0.3, 0.2).unwrap(), 0.0);
        assert_eq!(reg_inc_beta(1.0, 0.3, 0.2).unwrap(), 1.0);
        assert!(reg_inc_beta(1.1, 1.0, 1.0).is_err());
        assert!(reg_inc_beta(0.5, -1.0, 1.0).is_err());
    }

    #[test]
    fn inc_beta_against_quadrature_value() {
        // Reference from 40-digit quadrature of t^1.5 (1-t)^-0.3 / B(2.5, 0.7).
        let got = reg_inc_beta(0.3, 2.5, 0.7).unwrap();
        assert!((got - 0.029_814_024_845_250_466).abs() < 1e-12, "{got}");
    }

    #[test]
    fn tails_keep_relative_accuracy() {
        // Upper tail of Beta(0.5, 3) near y = 1: 1 - I_y = I_{1-y}(3, 0.5) ~ w^3 scale.
        let w: f64 = 1e-6;
        let parts = inc_beta_parts(1.0 - w, w, 0.5, 3.0).unwrap();
        let direct = inc_beta_parts(w, 1.0 - w, 3.0, 0.5).unwrap();
        assert!((parts.upper / direct.lower - 1.0).abs() < 1e-12);
        assert!(parts.upper < 1e-16);
    }

    #[test]
    fn inverse_closed_cases() {
        for &p in &[0.0, 0.01, 0.5, 0.93, 1.0] {
            assert_eq!(inv_reg_inc_beta(p, 1.0, 1.0).unwrap(), p);
        }
        assert!((inv_reg_inc_beta(0.5, 3.0, 3.0).unwrap() - 0.5).abs() < 1e-14);
        assert_eq!(inv_reg_inc_beta(0.0, 0.3, 4.0).unwrap(), 0.0);
        assert_eq!(inv_reg_inc_beta(1.0, 0.3, 4.0).unwrap(), 1.0);
        assert!(inv_reg_inc_beta(-0.1, 1.0, 1.0).is_err());
    }

    #[test]
    fn inverse_small_shapes_against_bisection() {
        let (a, b, p) = (0.2158, 0.2467, 0.25);
        // Independent bisection on the forward function.
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if reg_inc_beta(mid, a, b).unwrap() < p {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let y = inv_reg_inc_beta(p, a, b).unwrap();
        assert!((y - 0.5 * (lo + hi)).abs() < 1e-12, "{y} vs {lo}");
        assert!((reg_inc_beta(y, a, b).unwrap() - p).abs() < 1e-12);
    }

    #[test]
    fn inverse_extreme_tails() {
        for &(a, b) in &[(0.05, 0.05), (0.2, 5.0), (5.0, 0.2), (30.0, 2.0), (1.5, 0.7)] {
            for &p in &[1e-12, 1e-6, 0.01, 0.3, 0.7, 0.99, 1.0 - 1e-9] {
                let (y, w) = beta_quantile_pair(p, 1.0 - p, a, b).unwrap();
                let back = inc_beta_parts(y, w, a, b).unwrap();
                assert!((back.lower - p).abs() < 1e-12, "a={a} b={b} p={p}: {back:?}");
                let q = 1.0 - p;
                assert!((back.upper - q).abs() < 1e-9 * q, "a={a} b={b} p={p}: {back:?}");
            }
        }
    }
}
