use std::f64::consts::PI;

use crate::error::{domain, Result};

/// Tail of the limiting Kolmogorov distribution,
/// `P(K > t) = 2 Σ_{k≥1} (−1)^{k−1} exp(−2k²t²)`, where `t = √n·D`.
///
/// Small `t` uses the equivalent theta-function form of the cdf, which
/// converges quickly where the alternating series does not.
pub fn kolmogorov_sf(t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(domain("kolmogorov_sf", t, "t must be non-negative"));
    }
    if t == 0.0 {
        return Ok(1.0);
    }
    if t < 0.8 {
        // P(K ≤ t) = √(2π)/t Σ exp(−(2k−1)²π²/(8t²))
        let c = -PI * PI / (8.0 * t * t);
        let mut s = 0.0;
        for k in 1..=20 {
            let m = (2 * k - 1) as f64;
            let term = (c * m * m).exp();
            s += term;
            if term < 1e-17 * s {
                break;
            }
        }
        let cdf = (2.0 * PI).sqrt() / t * s;
        return Ok((1.0 - cdf).clamp(0.0, 1.0));
    }
    let mut s = 0.0;
    let mut sign = 1.0;
    for k in 1..=100 {
        let k = k as f64;
        let term = (-2.0 * k * k * t * t).exp();
        s += sign * term;
        sign = -sign;
        if term < 1e-14 {
            break;
        }
    }
    Ok((2.0 * s).clamp(0.0, 1.0))
}
