use crate::error::{domain, Result};
use crate::series::{sum_series, SeriesControl};

/// Gauss hypergeometric function ₂F₁(a, b; c; z) by its power series, for
/// `c > 0` and `0 ≤ z < 1`.
///
/// Terms follow the ratio `(a+k)(b+k) z / ((c+k)(k+1))`; summation stops on
/// the [`SeriesControl`] rule, with the remainder bounded by the observed
/// term ratio once it drops below one.
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64, ctl: &SeriesControl) -> Result<f64> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(domain("gauss_2f1", c, "c must be positive"));
    }
    if !(0.0..1.0).contains(&z) {
        return Err(domain("gauss_2f1", z, "z must lie in [0, 1)"));
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(domain("gauss_2f1", if a.is_finite() { b } else { a }, "a, b must be finite"));
    }
    let mut term = 1.0;
    let sum = sum_series(ctl, |k| {
        if k > 0 {
            let k1 = (k - 1) as f64;
            term *= (a + k1) * (b + k1) / ((c + k1) * (k1 + 1.0)) * z;
            if term == 0.0 {
                return None;
            }
        }
        Some(term)
    });
    sum.into_result("gauss_2f1")
}
