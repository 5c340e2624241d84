use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::specfun::{kolmogorov_sf, reg_inc_gamma_upper};
use crate::submodels::family_cdf;

use super::{Dataset, FitResult};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KsResult {
    pub stat: f64,
    /// Asymptotic p-value `P(K > √n D)`.
    pub pvalue: f64,
}

/// One-sample Kolmogorov–Smirnov test of sorted-or-unsorted `data` against
/// `cdf`. The cdf is evaluated once per distinct value.
pub fn ks_test<F>(data: &[f64], cdf: F) -> Result<KsResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if data.is_empty() {
        return Err(Error::InvalidData("K-S test needs at least one value".into()));
    }
    let mut xs = data.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    let mut stat = 0.0f64;
    let mut i = 0;
    while i < xs.len() {
        let mut j = i;
        while j + 1 < xs.len() && xs[j + 1] == xs[i] {
            j += 1;
        }
        let f = cdf(xs[i])?;
        stat = stat.max(f - i as f64 / n).max((j + 1) as f64 / n - f);
        i = j + 1;
    }
    Ok(KsResult {
        stat,
        pvalue: kolmogorov_sf(n.sqrt() * stat)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InformationCriteria {
    pub aic: f64,
    pub aicc: f64,
    pub bic: f64,
}

/// AIC, AICC and BIC for a maximized log-likelihood with `k` parameters
/// and `n` observations.
pub fn information_criteria(loglik: f64, k: usize, n: usize) -> Result<InformationCriteria> {
    if n <= k + 1 {
        return Err(domain("information_criteria", n as f64, "AICC needs n > k + 1"));
    }
    let kf = k as f64;
    let aic = -2.0 * loglik + 2.0 * kf;
    Ok(InformationCriteria {
        aic,
        aicc: aic + 2.0 * kf * (kf + 1.0) / (n as f64 - kf - 1.0),
        bic: -2.0 * loglik + kf * (n as f64).ln(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LrtResult {
    pub stat: f64,
    pub pvalue: f64,
    pub df: usize,
}

/// Likelihood-ratio test of `nested` against `full` with the chi-square
/// reference distribution. For nestings through γ → 0 the null value sits
/// on the boundary of the parameter space, where the chi-square reference
/// is only a convention.
pub fn lrt(nested: &FitResult, full: &FitResult) -> Result<LrtResult> {
    if !nested.family.nested_in(full.family) && nested.family != full.family {
        return Err(Error::NotNested {
            nested: nested.family.to_string(),
            full: full.family.to_string(),
        });
    }
    if nested.n != full.n {
        return Err(Error::InvalidData(format!(
            "fits use different sample sizes ({} and {})",
            nested.n, full.n
        )));
    }
    let raw = 2.0 * (full.loglik - nested.loglik);
    if raw < -1e-6 {
        return Err(Error::LrtOrdering(raw));
    }
    let stat = raw.max(0.0);
    let df = full.family.n_params() - nested.family.n_params();
    let pvalue = if df == 0 || stat == 0.0 {
        1.0
    } else {
        reg_inc_gamma_upper(df as f64 / 2.0, stat / 2.0)?
    };
    Ok(LrtResult { stat, pvalue, df })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GofReport {
    pub ks_stat: f64,
    pub ks_pvalue: f64,
    pub aic: f64,
    pub aicc: f64,
    pub bic: f64,
}

impl GofReport {
    /// K-S test against the fitted cdf plus information criteria, with
    /// estimated parameters plugged in.
    pub fn for_fit(d: &Dataset, f: &FitResult) -> Result<Self> {
        let ks = ks_test(&d.values, |x| family_cdf(x, &f.estimate))?;
        let ic = information_criteria(f.loglik, f.family.n_params(), d.n())?;
        Ok(Self {
            ks_stat: ks.stat,
            ks_pvalue: ks.pvalue,
            aic: ic.aic,
            aicc: ic.aicc,
            bic: ic.bic,
        })
    }
}
