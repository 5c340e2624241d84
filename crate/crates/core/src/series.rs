//! Truncation control and compensated accumulation shared by every
//! infinite-series evaluation in the crate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Term budget and tolerance for series evaluation.
///
/// A series stops once `|term| < abs_tol * |partial sum| + 1e-300` and, when the
/// terms decay geometrically, the estimated remainder also falls below that bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesControl {
    pub max_terms: usize,
    pub abs_tol: f64,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            max_terms: 10_000,
            abs_tol: 1e-12,
        }
    }
}

impl SeriesControl {
    pub fn new(max_terms: usize, abs_tol: f64) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::InvalidParameters(
                "series budget must allow at least one term".into(),
            ));
        }
        if !(abs_tol > 0.0 && abs_tol.is_finite()) {
            return Err(Error::InvalidParameters(format!(
                "series tolerance must be positive, got {abs_tol}"
            )));
        }
        Ok(Self { max_terms, abs_tol })
    }

    fn threshold(&self, sum: f64) -> f64 {
        self.abs_tol * sum.abs() + 1e-300
    }
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl std::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Outcome of summing a series under a [`SeriesControl`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesSum {
    pub value: f64,
    pub terms: usize,
    pub converged: bool,
    pub last_term: f64,
}

impl SeriesSum {
    pub fn into_result(self, function: &'static str) -> Result<f64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::SeriesNotConverged {
                function,
                terms: self.terms,
                last_term: self.last_term,
            })
        }
    }
}

/// Sums `term(0), term(1), ...` until the tolerance test passes or the budget
/// runs out. `term` returning `None` means the series terminated exactly.
pub fn sum_series<F>(ctl: &SeriesControl, mut term: F) -> SeriesSum
where
    F: FnMut(usize) -> Option<f64>,
{
    let mut acc = CompensatedSum::new();
    let mut prev_abs = f64::NAN;
    let mut last = 0.0;
    for k in 0..ctl.max_terms {
        let t = match term(k) {
            Some(t) => t,
            None => {
                return SeriesSum {
                    value: acc.value(),
                    terms: k,
                    converged: true,
                    last_term: last,
                }
            }
        };
        if !t.is_finite() {
            return SeriesSum {
                value: acc.value(),
                terms: k,
                converged: false,
                last_term: t,
            };
        }
        acc.add(t);
        last = t;
        let s = acc.value();
        let bound = ctl.threshold(s);
        // A zero term is not evidence of convergence (e.g. the first term of
        // an odd series), so require a non-trivial history.
        if k > 0 && t.abs() < bound {
            let ratio = t.abs() / prev_abs;
            let tail = if ratio.is_finite() && ratio < 1.0 {
                t.abs() * ratio / (1.0 - ratio)
            } else {
                t.abs()
            };
            if tail < bound {
                return SeriesSum {
                    value: s,
                    terms: k + 1,
                    converged: true,
                    last_term: t,
                };
            }
        }
        if t != 0.0 {
            prev_abs = t.abs();
        }
    }
    SeriesSum {
        value: acc.value(),
        terms: ctl.max_terms,
        converged: false,
        last_term: last,
    }
}

/// Sums an outer series whose terms are themselves series sums. The result
/// converges only if the outer sum and every inner sum converged.
pub(crate) fn sum_nested<F>(ctl: &SeriesControl, mut term: F) -> SeriesSum
where
    F: FnMut(usize) -> Option<SeriesSum>,
{
    let mut inner_ok = true;
    let mut s = sum_series(ctl, |j| {
        let t = term(j)?;
        inner_ok &= t.converged;
        Some(t.value)
    });
    s.converged &= inner_ok;
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        let ctl = SeriesControl::default();
        let s = sum_series(&ctl, |k| Some(0.5f64.powi(k as i32)));
        assert!(s.converged);
        assert!((s.value - 2.0).abs() < 1e-11);
    }

    #[test]
    fn terminating_series() {
        let ctl = SeriesControl::default();
        let s = sum_series(&ctl, |k| if k < 3 { Some(1.0) } else { None });
        assert!(s.converged);
        assert_eq!(s.value, 3.0);
        assert_eq!(s.terms, 3);
    }

    #[test]
    fn divergent_series_reports() {
        let ctl = SeriesControl::new(100, 1e-12).unwrap();
        let s = sum_series(&ctl, |k| Some(1.0 / (k as f64 + 1.0)));
        assert!(!s.converged);
        assert!(s.into_result("harmonic").is_err());
    }

    #[test]
    fn compensation_recovers_cancellation() {
        let acc: CompensatedSum = [1e16, 1.0, -1e16, 1.0].into_iter().collect();
        assert_eq!(acc.value(), 2.0);
    }

    #[test]
    fn rejects_bad_control() {
        assert!(SeriesControl::new(0, 1e-12).is_err());
        assert!(SeriesControl::new(10, 0.0).is_err());
    }
}
