//! Log-likelihood, score and observed information.
//!
//! With `z(x) = (e^{γx} − 1)/γ`, `H = θz` and `ρ = 1/(e^H − 1)` the
//! per-observation log-density is
//! `ln θ + γx − βH − ln B(α,β) + (α−1) ln(1 − e^{−H})`, and
//!
//! ```text
//! ∂/∂θ = 1/θ − βz + (α−1)ρz
//! ∂/∂γ = x − βθz′ + (α−1)ρθz′
//! ∂/∂α = ψ(α+β) − ψ(α) + ln(1 − e^{−H})
//! ∂/∂β = ψ(α+β) − ψ(β) − H
//! ```
//!
//! where primes are γ-derivatives. The exponential-baseline families use
//! `z = x` and have no γ coordinate.

use nalgebra::{DMatrix, DVector, Matrix4};
use serde::Serialize;

use crate::distribution::{ln_one_minus_exp_neg, BGParams};
use crate::error::{domain, Error, Result};
use crate::specfun::{digamma, log_beta, trigamma};
use crate::submodels::{Kernel, ModelSpec};

use super::Dataset;

/// `(z, ∂z/∂γ, ∂²z/∂γ²)` for `z = (e^{γx} − 1)/γ`.
pub(crate) fn gompertz_z_derivs(x: f64, gamma: f64) -> (f64, f64, f64) {
    let u = gamma * x;
    if u.abs() < 0.2 {
        let (mut z, mut z1, mut z2) = (0.0, 0.0, 0.0);
        let mut inv_fact = 1.0;
        for k in 1..=24 {
            let kf = k as f64;
            inv_fact /= kf;
            z += u.powi(k - 1) * inv_fact;
            if k >= 2 {
                z1 += (kf - 1.0) * u.powi(k - 2) * inv_fact;
            }
            if k >= 3 {
                z2 += (kf - 1.0) * (kf - 2.0) * u.powi(k - 3) * inv_fact;
            }
        }
        (x * z, x * x * z1, x * x * x * z2)
    } else {
        let e = u.exp();
        let z = u.exp_m1() / gamma;
        let z1 = (x * e - z) / gamma;
        let z2 = (x * x * e - 2.0 * z1) / gamma;
        (z, z1, z2)
    }
}

/// Per-observation quantities `t_i = e^{−z_i}`, `d_i = ∂ ln t_i/∂γ` and
/// `q_i = ∂d_i/∂γ`, valid for one value of γ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoreWorkspace {
    pub gamma: f64,
    pub t: Vec<f64>,
    /// ln t_i = −z_i, kept because t_i underflows for large observations.
    pub log_t: Vec<f64>,
    pub d: Vec<f64>,
    pub q: Vec<f64>,
}

impl ScoreWorkspace {
    pub fn new(data: &Dataset, gamma: f64) -> Self {
        let n = data.n();
        let mut ws = Self {
            gamma,
            t: Vec::with_capacity(n),
            log_t: Vec::with_capacity(n),
            d: Vec::with_capacity(n),
            q: Vec::with_capacity(n),
        };
        for &x in &data.values {
            let (z, z1, z2) = gompertz_z_derivs(x, gamma);
            ws.t.push((-z).exp());
            ws.log_t.push(-z);
            ws.d.push(-z1);
            ws.q.push(-z2);
        }
        ws
    }
}

/// Log-likelihood with gradient and Hessian in (θ, γ, α, β) coordinates.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Derivatives {
    pub loglik: f64,
    pub grad: [f64; 4],
    pub hess: [[f64; 4]; 4],
}

pub(crate) fn kernel_derivatives(data: &[f64], k: &Kernel, hessian: bool) -> Result<Derivatives> {
    let (theta, alpha, beta) = (k.theta, k.alpha, k.beta);
    let n = data.len() as f64;
    let lb = log_beta(alpha, beta)?;
    let psi_ab = digamma(alpha + beta)?;
    let am1 = alpha - 1.0;
    let mut ll = 0.0;
    let mut g = [0.0; 4];
    let mut h = [[0.0; 4]; 4];
    for &x in data {
        if !(x > 0.0) {
            return Err(domain("score", x, "observations must be positive"));
        }
        let (z, z1, z2) = match k.gamma {
            Some(gm) => gompertz_z_derivs(x, gm),
            None => (x, 0.0, 0.0),
        };
        let gx = k.gamma.map_or(0.0, |gm| gm * x);
        let big_h = theta * z;
        let ln_g = ln_one_minus_exp_neg(big_h);
        let rho = 1.0 / big_h.exp_m1();
        ll += theta.ln() + gx - beta * big_h - lb + am1 * ln_g;
        g[0] += 1.0 / theta - beta * z + am1 * rho * z;
        g[1] += x - beta * theta * z1 + am1 * rho * theta * z1;
        g[2] += ln_g;
        g[3] -= big_h;
        if hessian {
            let rr = rho * (1.0 + rho);
            h[0][0] += -1.0 / (theta * theta) - am1 * rr * z * z;
            h[0][1] += -beta * z1 + am1 * (rho * z1 - rr * theta * z * z1);
            h[1][1] += -beta * theta * z2 + am1 * theta * (rho * z2 - rr * theta * z1 * z1);
            h[0][2] += rho * z;
            h[1][2] += theta * rho * z1;
            h[0][3] -= z;
            h[1][3] -= theta * z1;
        }
    }
    g[2] += n * (psi_ab - digamma(alpha)?);
    g[3] += n * (psi_ab - digamma(beta)?);
    if hessian {
        let tri_ab = trigamma(alpha + beta)?;
        h[2][2] = n * (tri_ab - trigamma(alpha)?);
        h[2][3] = n * tri_ab;
        h[3][3] = n * (tri_ab - trigamma(beta)?);
        for i in 0..4 {
            for j in 0..i {
                h[i][j] = h[j][i];
            }
        }
    }
    let finite = ll.is_finite()
        && g.iter().all(|v| v.is_finite())
        && h.iter().flatten().all(|v| v.is_finite());
    if !finite {
        return Err(Error::NonFinite("log-likelihood derivatives"));
    }
    Ok(Derivatives {
        loglik: ll,
        grad: g,
        hess: h,
    })
}

fn bg_kernel(p: &BGParams) -> Kernel {
    Kernel {
        theta: p.theta,
        gamma: Some(p.gamma),
        alpha: p.alpha,
        beta: p.beta,
    }
}

fn check_observations(data: &[f64]) -> Result<()> {
    match data.iter().find(|x| !(**x >= 0.0)) {
        Some(&x) => Err(domain("log_likelihood", x, "observations must be >= 0")),
        None => Ok(()),
    }
}

/// Σ ln f(x_i) for BG. Observations equal to 0 follow the density
/// convention at the origin.
pub fn log_likelihood(data: &[f64], p: &BGParams) -> Result<f64> {
    p.validate()?;
    check_observations(data)?;
    let k = bg_kernel(p);
    let lb = log_beta(p.alpha, p.beta)?;
    Ok(data.iter().map(|&x| k.log_pdf(x, lb)).sum())
}

/// Σ ln f(x_i) for any family.
pub fn family_log_likelihood(data: &[f64], m: &ModelSpec) -> Result<f64> {
    check_observations(data)?;
    let k = m.kernel();
    let lb = log_beta(k.alpha, k.beta)?;
    Ok(data.iter().map(|&x| k.log_pdf(x, lb)).sum())
}

/// Components of the BG score vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Score {
    pub alpha: f64,
    pub beta: f64,
    pub theta: f64,
    pub gamma: f64,
}

impl Score {
    /// (U_θ, U_γ, U_α, U_β)
    pub fn to_array(&self) -> [f64; 4] {
        [self.theta, self.gamma, self.alpha, self.beta]
    }

    pub fn sup_norm(&self) -> f64 {
        self.to_array().iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Gradient of the BG log-likelihood.
pub fn score(data: &[f64], p: &BGParams) -> Result<Score> {
    p.validate()?;
    let d = kernel_derivatives(data, &bg_kernel(p), false)?;
    Ok(Score {
        theta: d.grad[0],
        gamma: d.grad[1],
        alpha: d.grad[2],
        beta: d.grad[3],
    })
}

/// Negative Hessian of the BG log-likelihood, rows and columns ordered
/// (θ, γ, α, β).
pub fn observed_information(data: &[f64], p: &BGParams) -> Result<Matrix4<f64>> {
    p.validate()?;
    let d = kernel_derivatives(data, &bg_kernel(p), true)?;
    Ok(Matrix4::from_fn(|i, j| -d.hess[i][j]))
}

/// Gradient over a family's free parameters, in `free_params()` order.
pub fn family_score(data: &[f64], m: &ModelSpec) -> Result<DVector<f64>> {
    let d = kernel_derivatives(data, &m.kernel(), false)?;
    let idx: Vec<usize> = m.family.free_params().iter().map(|p| p.index()).collect();
    Ok(DVector::from_iterator(idx.len(), idx.iter().map(|&i| d.grad[i])))
}

/// Observed information over a family's free parameters.
pub fn family_observed_information(data: &[f64], m: &ModelSpec) -> Result<DMatrix<f64>> {
    let d = kernel_derivatives(data, &m.kernel(), true)?;
    let idx: Vec<usize> = m.family.free_params().iter().map(|p| p.index()).collect();
    Ok(DMatrix::from_fn(idx.len(), idx.len(), |i, j| {
        -d.hess[idx[i]][idx[j]]
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::submodels::ModelFamily;

    fn params(theta: f64, gamma: f64, alpha: f64, beta: f64) -> BGParams {
        BGParams::new(theta, gamma, alpha, beta).unwrap()
    }

    #[test]
    fn z_derivatives_match_both_branches() {
        let x = 2.0;
        for &g in &[0.0999, 0.1001] {
            let (z, z1, z2) = gompertz_z_derivs(x, g);
            let h = 1e-5;
            let zp = |gg: f64| (gg * x).exp_m1() / gg;
            assert!((z - zp(g)).abs() < 1e-14);
            let fd1 = (zp(g + h) - zp(g - h)) / (2.0 * h);
            let fd2 = (zp(g + h) - 2.0 * zp(g) + zp(g - h)) / (h * h);
            assert!((z1 - fd1).abs() < 1e-8, "{z1} {fd1}");
            assert!((z2 - fd2).abs() < 1e-4, "{z2} {fd2}");
        }
        // γ → 0: z → x, z′ → x²/2, z″ → x³/3
        let (z, z1, z2) = gompertz_z_derivs(3.0, 1e-12);
        assert!((z - 3.0).abs() < 1e-10);
        assert!((z1 - 4.5).abs() < 1e-10);
        assert!((z2 - 9.0).abs() < 1e-10);
    }

    #[test]
    fn origin_convention() {
        let p = params(2.0, 1.0, 1.0, 3.0);
        assert!((log_likelihood(&[0.0], &p).unwrap() - 6f64.ln()).abs() < 1e-14);
        let q = params(2.0, 1.0, 1.5, 3.0);
        assert_eq!(log_likelihood(&[0.0, 1.0], &q).unwrap(), f64::NEG_INFINITY);
        assert!(log_likelihood(&[-1.0], &p).is_err());
        assert!(score(&[0.0], &p).is_err());
    }

    #[test]
    fn alpha_score_at_unit_shapes() {
        let data = [0.3, 1.1, 2.0, 0.7];
        let p = params(0.8, 0.5, 1.0, 1.0);
        let s = score(&data, &p).unwrap();
        let expected: f64 = data
            .iter()
            .map(|&x| ln_one_minus_exp_neg(p.baseline_cumhaz(x)))
            .sum::<f64>()
            + data.len() as f64;
        assert!((s.alpha - expected).abs() < 1e-12);
    }

    #[test]
    fn alpha_information_at_unit_shapes() {
        let data = [0.3, 1.1, 2.0, 0.7, 0.2];
        let j = observed_information(&data, &params(0.8, 0.5, 1.0, 1.0)).unwrap();
        assert!((j[(2, 2)] - 5.0).abs() < 1e-12);
        assert_eq!(j, j.transpose());
    }

    #[test]
    fn score_matches_finite_differences() {
        let data = [0.05, 0.4, 1.3, 2.2, 0.9, 3.1, 0.02];
        let p = params(0.3, 0.8, 0.6, 1.7);
        let s = score(&data, &p).unwrap().to_array();
        let base = p.to_array();
        for i in 0..4 {
            let h = 1e-6 * base[i].max(1.0);
            let mut up = base;
            let mut dn = base;
            up[i] += h;
            dn[i] -= h;
            let fd = (log_likelihood(&data, &BGParams::from_array(up).unwrap()).unwrap()
                - log_likelihood(&data, &BGParams::from_array(dn).unwrap()).unwrap())
                / (2.0 * h);
            assert!((s[i] - fd).abs() <= 1e-6 * fd.abs().max(1.0), "{i}: {} vs {fd}", s[i]);
        }
    }

    #[test]
    fn family_restrictions_pick_free_coordinates() {
        let data = [0.5, 1.0, 1.5, 2.5];
        let m = ModelSpec::new(ModelFamily::GG, vec![0.4, 0.6, 1.3]).unwrap();
        let p = params(0.4, 0.6, 1.3, 1.0);
        let fs = family_score(&data, &m).unwrap();
        let full = score(&data, &p).unwrap().to_array();
        for i in 0..3 {
            assert!((fs[i] - full[i]).abs() < 1e-12);
        }
        let fj = family_observed_information(&data, &m).unwrap();
        let j = observed_information(&data, &p).unwrap();
        assert!((fj[(1, 2)] - j[(1, 2)]).abs() < 1e-12);
        let ll = family_log_likelihood(&data, &m).unwrap();
        assert!((ll - log_likelihood(&data, &p).unwrap()).abs() < 1e-12);
    }
}
