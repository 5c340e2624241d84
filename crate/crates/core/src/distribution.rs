//! The beta-Gompertz distribution: densities, distribution functions,
//! hazards, quantiles and seeded sampling.
//!
//! With Gompertz baseline `G(x) = 1 − exp(−(θ/γ)(e^{γx} − 1))` the BG cdf is
//! `F(x) = I_{G(x)}(α, β)`. Everything is computed through the cumulative
//! hazard `H(x) = θ·(e^{γx} − 1)/γ`, evaluated with `expm1` so that small `γ`
//! degrades smoothly to the exponential limit `H = θx`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::specfun::{beta_quantile_pair, inc_beta_parts, log_beta};

/// Parameters (θ, γ, α, β) of BG(θ, γ, α, β); all strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BGParams {
    /// Gompertz scale θ.
    pub theta: f64,
    /// Gompertz shape γ.
    pub gamma: f64,
    /// First beta-generator shape α.
    pub alpha: f64,
    /// Second beta-generator shape β.
    pub beta: f64,
}

/// `(e^{γx} − 1)/γ`, finite as γ → 0.
#[inline]
pub(crate) fn gompertz_z(x: f64, gamma: f64) -> f64 {
    (gamma * x).exp_m1() / gamma
}

/// `ln(1 − e^{−h})` for `h > 0`.
#[inline]
pub(crate) fn ln_one_minus_exp_neg(h: f64) -> f64 {
    if h > std::f64::consts::LN_2 {
        (-(-h).exp()).ln_1p()
    } else {
        (-(-h).exp_m1()).ln()
    }
}

/// Gompertz cdf `1 − exp(−(θ/γ)(e^{γx} − 1))`.
pub fn gompertz_cdf(x: f64, theta: f64, gamma: f64) -> Result<f64> {
    if !(theta > 0.0 && gamma > 0.0) {
        return Err(Error::InvalidParameters(format!(
            "Gompertz parameters must be positive (theta={theta}, gamma={gamma})"
        )));
    }
    if !(x >= 0.0) {
        return Err(domain("gompertz_cdf", x, "support is [0, inf)"));
    }
    Ok(-(-theta * gompertz_z(x, gamma)).exp_m1())
}

impl BGParams {
    pub fn new(theta: f64, gamma: f64, alpha: f64, beta: f64) -> Result<Self> {
        let p = Self {
            theta,
            gamma,
            alpha,
            beta,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("theta", self.theta),
            ("gamma", self.gamma),
            ("alpha", self.alpha),
            ("beta", self.beta),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidParameters(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(())
    }

    /// Values in the canonical order (θ, γ, α, β).
    pub fn to_array(&self) -> [f64; 4] {
        [self.theta, self.gamma, self.alpha, self.beta]
    }

    pub fn from_array(v: [f64; 4]) -> Result<Self> {
        Self::new(v[0], v[1], v[2], v[3])
    }

    fn check_x(x: f64, function: &'static str) -> Result<()> {
        if x >= 0.0 {
            Ok(())
        } else {
            Err(domain(function, x, "support is [0, inf)"))
        }
    }

    /// Cumulative hazard of the Gompertz baseline, `−ln(1 − G(x))`.
    #[inline]
    pub fn baseline_cumhaz(&self, x: f64) -> f64 {
        self.theta * gompertz_z(x, self.gamma)
    }

    /// ln f(x). At `x = 0` the density is `θβ` when α = 1, `0` (log −∞) when
    /// α > 1 and `+∞` when α < 1.
    pub fn log_pdf(&self, x: f64) -> Result<f64> {
        Self::check_x(x, "log_pdf")?;
        let lb = log_beta(self.alpha, self.beta)?;
        Ok(self.log_pdf_with(x, lb))
    }

    pub(crate) fn log_pdf_with(&self, x: f64, ln_beta_fn: f64) -> f64 {
        let h = self.baseline_cumhaz(x);
        let core = self.theta.ln() + self.gamma * x - self.beta * h - ln_beta_fn;
        if self.alpha == 1.0 {
            return core;
        }
        if h == 0.0 {
            return if self.alpha > 1.0 {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            };
        }
        core + (self.alpha - 1.0) * ln_one_minus_exp_neg(h)
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        Ok(self.log_pdf(x)?.exp())
    }

    /// F(x) = I_{G(x)}(α, β).
    pub fn cdf(&self, x: f64) -> Result<f64> {
        Self::check_x(x, "cdf")?;
        Ok(self.tails(x)?.lower)
    }

    /// 1 − F(x), evaluated as I_{1−G(x)}(β, α) so the upper tail keeps its
    /// relative accuracy.
    pub fn sf(&self, x: f64) -> Result<f64> {
        Self::check_x(x, "sf")?;
        Ok(self.tails(x)?.upper)
    }

    fn tails(&self, x: f64) -> Result<crate::specfun::IncBeta> {
        let h = self.baseline_cumhaz(x);
        inc_beta_parts(-(-h).exp_m1(), (-h).exp(), self.alpha, self.beta)
    }

    /// Hazard rate f(x) / (1 − F(x)), computed in log space.
    pub fn hrf(&self, x: f64) -> Result<f64> {
        Self::check_x(x, "hrf")?;
        let lp = self.log_pdf(x)?;
        let ln_sf = self.tails(x)?.ln_upper;
        if ln_sf == f64::NEG_INFINITY {
            return Err(Error::NonFinite("survival function (underflow)"));
        }
        Ok((lp - ln_sf).exp())
    }

    /// Reversed hazard f(x) / F(x); requires x > 0.
    pub fn reversed_hrf(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(domain("reversed_hrf", x, "x must be positive"));
        }
        let lp = self.log_pdf(x)?;
        let ln_cdf = self.tails(x)?.ln_lower;
        if ln_cdf == f64::NEG_INFINITY {
            return Err(Error::NonFinite("distribution function (underflow)"));
        }
        Ok((lp - ln_cdf).exp())
    }

    /// Quantile function for `u ∈ (0, 1)`:
    /// `Q(u) = (1/γ) ln(1 − (γ/θ) ln(1 − Q_{α,β}(u)))`.
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(domain("quantile", u, "probability must lie in (0, 1)"));
        }
        self.quantile_pair(u, 1.0 - u)
    }

    /// Inverse survival function: the x with `1 − F(x) = q`, accurate for
    /// tiny `q`.
    pub fn isf(&self, q: f64) -> Result<f64> {
        if !(q > 0.0 && q < 1.0) {
            return Err(domain("isf", q, "probability must lie in (0, 1)"));
        }
        self.quantile_pair(1.0 - q, q)
    }

    fn quantile_pair(&self, u: f64, q: f64) -> Result<f64> {
        let (v, w) = beta_quantile_pair(u, q, self.alpha, self.beta)?;
        let cumhaz = if v < 0.5 { -(-v).ln_1p() } else { -w.ln() };
        Ok(self.baseline_inverse(cumhaz))
    }

    /// x with baseline cumulative hazard `h`.
    #[inline]
    pub(crate) fn baseline_inverse(&self, h: f64) -> f64 {
        (self.gamma * h / self.theta).ln_1p() / self.gamma
    }

    /// `n` draws from a ChaCha stream seeded with `seed`.
    pub fn sample(&self, n: usize, seed: u64) -> Result<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.sample_with(n, &mut rng)
    }

    /// Inverse-cdf draws `X = G⁻¹(V)`, `V ~ Beta(α, β)` obtained by inverting
    /// uniforms from `rng`.
    pub fn sample_with<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<Vec<f64>> {
        (0..n)
            .map(|_| {
                let u = open_unit(rng);
                self.quantile(u)
            })
            .collect()
    }
}

/// Uniform draw on the open interval (0, 1).
pub(crate) fn open_unit<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = rng.gen();
        if u > 0.0 {
            return u;
        }
    }
}
