//! The BG family and its five nested sub-models.
//!
//! | Family | Free parameters | Relation to BG |
//! |--------|-----------------|----------------|
//! | E  | θ       | γ → 0, α = β = 1 |
//! | GE | θ, α    | γ → 0, β = 1 |
//! | BE | θ, α, β | γ → 0 |
//! | G  | θ, γ    | α = β = 1 |
//! | GG | θ, γ, α | β = 1 |
//! | BG | θ, γ, α, β | |
//!
//! The γ → 0 families use the exponential baseline `H(x) = θx` in closed
//! form instead of a BG density with tiny γ.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::distribution::{gompertz_z, ln_one_minus_exp_neg, open_unit, BGParams};
use crate::error::{domain, Error, Result};
use crate::specfun::{beta_quantile_pair, inc_beta_parts, log_beta};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    Theta,
    Gamma,
    Alpha,
    Beta,
}

impl Param {
    pub const ALL: [Param; 4] = [Param::Theta, Param::Gamma, Param::Alpha, Param::Beta];

    pub fn name(self) -> &'static str {
        match self {
            Param::Theta => "theta",
            Param::Gamma => "gamma",
            Param::Alpha => "alpha",
            Param::Beta => "beta",
        }
    }

    /// Position in the canonical (θ, γ, α, β) ordering.
    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelFamily {
    E,
    GE,
    BE,
    G,
    GG,
    BG,
}

impl ModelFamily {
    /// All families in the order E, GE, BE, G, GG, BG.
    pub const ALL: [ModelFamily; 6] = [
        ModelFamily::E,
        ModelFamily::GE,
        ModelFamily::BE,
        ModelFamily::G,
        ModelFamily::GG,
        ModelFamily::BG,
    ];

    pub fn free_params(self) -> &'static [Param] {
        use Param::*;
        match self {
            ModelFamily::E => &[Theta],
            ModelFamily::GE => &[Theta, Alpha],
            ModelFamily::BE => &[Theta, Alpha, Beta],
            ModelFamily::G => &[Theta, Gamma],
            ModelFamily::GG => &[Theta, Gamma, Alpha],
            ModelFamily::BG => &[Theta, Gamma, Alpha, Beta],
        }
    }

    pub fn n_params(self) -> usize {
        self.free_params().len()
    }

    /// Whether the family has the Gompertz baseline (γ free).
    pub fn has_gamma(self) -> bool {
        self.free_params().contains(&Param::Gamma)
    }

    pub fn label(self) -> &'static str {
        match self {
            ModelFamily::E => "E",
            ModelFamily::GE => "GE",
            ModelFamily::BE => "BE",
            ModelFamily::G => "G",
            ModelFamily::GG => "GG",
            ModelFamily::BG => "BG",
        }
    }

    /// True when every free parameter of `self` is free in `other`.
    pub fn nested_in(self, other: ModelFamily) -> bool {
        self.free_params()
            .iter()
            .all(|p| other.free_params().contains(p))
    }
}

impl fmt::Display for ModelFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ModelFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModelFamily::ALL
            .into_iter()
            .find(|f| f.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                Error::InvalidParameters(format!(
                    "unknown family '{s}' (expected one of E, GE, BE, G, GG, BG)"
                ))
            })
    }
}

/// A family together with values for its free parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub family: ModelFamily,
    /// Values aligned with `family.free_params()`.
    pub values: Vec<f64>,
}

/// How a sub-model sits inside BG.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Embedding {
    /// BG parameters with the fixed coordinates set to 1.
    Exact(BGParams),
    /// The γ → 0 boundary, not attained by any BG parameter.
    Limit {
        theta: f64,
        alpha: f64,
        beta: f64,
        /// Difference in free-parameter counts to BG.
        df_from_bg: usize,
    },
}

impl ModelSpec {
    pub fn new(family: ModelFamily, values: Vec<f64>) -> Result<Self> {
        if values.len() != family.n_params() {
            return Err(Error::InvalidParameters(format!(
                "{family} takes {} parameters, got {}",
                family.n_params(),
                values.len()
            )));
        }
        for (p, v) in family.free_params().iter().zip(&values) {
            if !(*v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidParameters(format!(
                    "{} must be positive and finite, got {v}",
                    p.name()
                )));
            }
        }
        Ok(Self { family, values })
    }

    /// Builds a spec from the canonical (θ, γ, α, β) vector, keeping only the
    /// family's free coordinates.
    pub fn from_full(family: ModelFamily, full: [f64; 4]) -> Result<Self> {
        let values = family
            .free_params()
            .iter()
            .map(|p| full[p.index()])
            .collect();
        Self::new(family, values)
    }

    pub fn get(&self, param: Param) -> Option<f64> {
        self.family
            .free_params()
            .iter()
            .position(|p| *p == param)
            .map(|i| self.values[i])
    }

    /// Named parameter values.
    pub fn to_map(&self) -> BTreeMap<&'static str, f64> {
        self.family
            .free_params()
            .iter()
            .zip(&self.values)
            .map(|(p, v)| (p.name(), *v))
            .collect()
    }

    /// (θ, γ, α, β) with fixed shapes set to 1 and γ set to 0 for the
    /// exponential-baseline families.
    pub fn full(&self) -> [f64; 4] {
        let mut out = [0.0, 0.0, 1.0, 1.0];
        for (p, v) in self.family.free_params().iter().zip(&self.values) {
            out[p.index()] = *v;
        }
        out
    }

    pub(crate) fn kernel(&self) -> Kernel {
        let [theta, gamma, alpha, beta] = self.full();
        Kernel {
            theta,
            gamma: self.family.has_gamma().then_some(gamma),
            alpha,
            beta,
        }
    }
}

/// Shared density algebra for every family: a beta generator applied to the
/// baseline with cumulative hazard `θ z(x)`, where `z(x) = (e^{γx} − 1)/γ`
/// or `z(x) = x` without γ.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Kernel {
    pub theta: f64,
    pub gamma: Option<f64>,
    pub alpha: f64,
    pub beta: f64,
}

impl Kernel {
    #[inline]
    pub fn z(&self, x: f64) -> f64 {
        match self.gamma {
            Some(g) => gompertz_z(x, g),
            None => x,
        }
    }

    pub fn log_pdf(&self, x: f64, ln_beta_fn: f64) -> f64 {
        let h = self.theta * self.z(x);
        let gx = self.gamma.map_or(0.0, |g| g * x);
        let core = self.theta.ln() + gx - self.beta * h - ln_beta_fn;
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

    pub fn cdf(&self, x: f64) -> Result<f64> {
        let h = self.theta * self.z(x);
        Ok(inc_beta_parts(-(-h).exp_m1(), (-h).exp(), self.alpha, self.beta)?.lower)
    }

    pub fn sf(&self, x: f64) -> Result<f64> {
        let h = self.theta * self.z(x);
        Ok(inc_beta_parts(-(-h).exp_m1(), (-h).exp(), self.alpha, self.beta)?.upper)
    }

    /// x whose baseline cumulative hazard is `h`.
    pub fn baseline_inverse(&self, h: f64) -> f64 {
        match self.gamma {
            Some(g) => (g * h / self.theta).ln_1p() / g,
            None => h / self.theta,
        }
    }

    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(domain("quantile", u, "probability must lie in (0, 1)"));
        }
        let (v, w) = beta_quantile_pair(u, 1.0 - u, self.alpha, self.beta)?;
        let h = if v < 0.5 { -(-v).ln_1p() } else { -w.ln() };
        Ok(self.baseline_inverse(h))
    }
}

/// Log-density of any family.
pub fn family_log_pdf(x: f64, m: &ModelSpec) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(domain("family_log_pdf", x, "support is [0, inf)"));
    }
    let k = m.kernel();
    Ok(k.log_pdf(x, log_beta(k.alpha, k.beta)?))
}

/// Distribution function of any family.
pub fn family_cdf(x: f64, m: &ModelSpec) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(domain("family_cdf", x, "support is [0, inf)"));
    }
    m.kernel().cdf(x)
}

/// Survival function of any family.
pub fn family_sf(x: f64, m: &ModelSpec) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(domain("family_sf", x, "support is [0, inf)"));
    }
    m.kernel().sf(x)
}

/// Quantile function of any family.
pub fn family_quantile(u: f64, m: &ModelSpec) -> Result<f64> {
    m.kernel().quantile(u)
}

/// Inverse-cdf draws from any family using uniforms from `rng`.
pub fn family_sample_with<R: Rng + ?Sized>(m: &ModelSpec, n: usize, rng: &mut R) -> Result<Vec<f64>> {
    let k = m.kernel();
    (0..n).map(|_| k.quantile(open_unit(rng))).collect()
}

/// Places a sub-model inside BG.
pub fn embed_in_bg(m: &ModelSpec) -> Embedding {
    let [theta, gamma, alpha, beta] = m.full();
    if m.family.has_gamma() {
        Embedding::Exact(BGParams {
            theta,
            gamma,
            alpha,
            beta,
        })
    } else {
        Embedding::Limit {
            theta,
            alpha,
            beta,
            df_from_bg: ModelFamily::BG.n_params() - m.family.n_params(),
        }
    }
}
