use serde::Serialize;

use crate::error::{domain, Result};

/// Coefficients `c_{m,r}` of `(Σ_r b_r u^r)^m` for every power `m = 0..=n`
/// and `r = 0..=R`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerSeriesPow {
    /// Row `m` holds `c_{m,0..=R}`.
    pub c: Vec<Vec<f64>>,
}

impl PowerSeriesPow {
    /// Coefficients of the `m`-th power.
    pub fn coeffs(&self, m: usize) -> &[f64] {
        &self.c[m]
    }

    pub fn max_power(&self) -> usize {
        self.c.len() - 1
    }
}

/// Raises a power series to the integer powers `0..=n`, keeping `R + 1`
/// coefficients, by `c_{m,r} = (r b_0)^{−1} Σ_{k=1..r} [k(m+1) − r] b_k c_{m,r−k}`
/// with `c_{m,0} = b_0^m`. Coefficients of `b` beyond its length are zero.
pub fn power_series_pow(b: &[f64], n: usize, r_max: usize) -> Result<PowerSeriesPow> {
    let b0 = b.first().copied().unwrap_or(0.0);
    if b0 == 0.0 {
        return Err(domain("power_series_pow", b0, "b_0 must be non-zero"));
    }
    if n == 0 || r_max == 0 {
        return Err(domain(
            "power_series_pow",
            n.min(r_max) as f64,
            "power and length must be at least 1",
        ));
    }
    let bk = |k: usize| b.get(k).copied().unwrap_or(0.0);
    let c = (0..=n)
        .map(|m| {
            let mut row = Vec::with_capacity(r_max + 1);
            row.push(b0.powi(m as i32));
            for r in 1..=r_max {
                let mut s = 0.0;
                for k in 1..=r {
                    let factor = (k * (m + 1)) as f64 - r as f64;
                    s += factor * bk(k) * row[r - k];
                }
                row.push(s / (r as f64 * b0));
            }
            row
        })
        .collect();
    Ok(PowerSeriesPow { c })
}
