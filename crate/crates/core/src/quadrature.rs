//! Double-exponential (tanh-sinh) quadrature on finite intervals.
//!
//! The abscissae cluster doubly-exponentially at both ends, which makes the rule
//! robust for integrable endpoint singularities such as `x^(a-1)` with `a < 1`.
//! Integrands receive the evaluation point together with its distances to both
//! endpoints of the original interval, so `1 - v` near `v = 1` can be used
//! without cancellation. Panels that fail to converge are bisected.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// An abscissa with its exact offsets from the interval ends.
#[derive(Debug, Clone, Copy)]
pub struct Point {
    pub x: f64,
    pub from_left: f64,
    pub from_right: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_level: u32,
    pub max_depth: u32,
}

impl Default for Quadrature {
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            rel_tol: 1e-11,
            max_level: 9,
            max_depth: 12,
        }
    }
}

const T_MAX: f64 = 6.6;

impl Quadrature {
    pub fn with_tolerance(abs_tol: f64, rel_tol: f64) -> Self {
        Self {
            abs_tol,
            rel_tol,
            ..Self::default()
        }
    }

    /// Integrates `f` over `[a, b]`.
    pub fn integrate<F>(&self, f: F, a: f64, b: f64) -> Result<Integral>
    where
        F: Fn(Point) -> f64,
    {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::Quadrature(format!(
                "interval [{a}, {b}] must be finite"
            )));
        }
        if a == b {
            return Ok(Integral {
                value: 0.0,
                error: 0.0,
                evaluations: 0,
            });
        }
        if a > b {
            let flipped = |p: Point| {
                f(Point {
                    x: p.x,
                    from_left: p.from_right,
                    from_right: p.from_left,
                })
            };
            let r = self.integrate_ordered(&flipped, b, a)?;
            return Ok(Integral {
                value: -r.value,
                ..r
            });
        }
        self.integrate_ordered(&f, a, b)
    }

    fn integrate_ordered<F>(&self, f: &F, a: f64, b: f64) -> Result<Integral>
    where
        F: Fn(Point) -> f64,
    {
        let mut evals = 0;
        let (value, error) =
            self.adaptive(f, a, b, a, b, self.abs_tol, 0, &mut evals)?;
        Ok(Integral {
            value,
            error,
            evaluations: evals,
        })
    }

    /// Integrates over consecutive pieces `[edges[0], edges[1]], ...`.
    /// Distances passed to `f` refer to the outermost endpoints.
    pub fn integrate_pieces<F>(&self, f: F, edges: &[f64]) -> Result<Integral>
    where
        F: Fn(Point) -> f64,
    {
        let (a, b) = match (edges.first(), edges.last()) {
            (Some(&a), Some(&b)) if edges.len() >= 2 => (a, b),
            _ => return Err(Error::Quadrature("need at least two edges".into())),
        };
        let mut total = Integral {
            value: 0.0,
            error: 0.0,
            evaluations: 0,
        };
        for w in edges.windows(2) {
            if w[1] <= w[0] {
                continue;
            }
            let mut evals = 0;
            let (v, e) = self.adaptive(&f, a, b, w[0], w[1], self.abs_tol, 0, &mut evals)?;
            total.value += v;
            total.error += e;
            total.evaluations += evals;
        }
        Ok(total)
    }

    #[allow(clippy::too_many_arguments)]
    fn adaptive<F>(
        &self,
        f: &F,
        a: f64,
        b: f64,
        lo: f64,
        hi: f64,
        abs_tol: f64,
        depth: u32,
        evals: &mut usize,
    ) -> Result<(f64, f64)>
    where
        F: Fn(Point) -> f64,
    {
        let panel = self.panel(f, a, b, lo, hi, abs_tol, evals)?;
        if panel.converged {
            return Ok((panel.value, panel.error));
        }
        if depth >= self.max_depth {
            return Err(Error::Quadrature(format!(
                "no convergence on [{lo:e}, {hi:e}] (estimate {:e}, error {:e})",
                panel.value, panel.error
            )));
        }
        let mid = lo + 0.5 * (hi - lo);
        let (l, el) = self.adaptive(f, a, b, lo, mid, 0.5 * abs_tol, depth + 1, evals)?;
        let (r, er) = self.adaptive(f, a, b, mid, hi, 0.5 * abs_tol, depth + 1, evals)?;
        Ok((l + r, el + er))
    }

    #[allow(clippy::too_many_arguments)]
    fn panel<F>(
        &self,
        f: &F,
        a: f64,
        b: f64,
        lo: f64,
        hi: f64,
        abs_tol: f64,
        evals: &mut usize,
    ) -> Result<Panel>
    where
        F: Fn(Point) -> f64,
    {
        let hw = 0.5 * (hi - lo);
        let base_left = lo - a;
        let base_right = b - hi;
        let mut eval = |t: f64| -> Result<f64> {
            // Contribution of the symmetric node pair at +-t (single node at t = 0).
            let u = FRAC_PI_2 * t.sinh();
            let e = (-2.0 * u).exp();
            let d = hw * 2.0 * e / (1.0 + e);
            if d <= 0.0 {
                return Ok(0.0);
            }
            let w = FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
            let span = hi - lo;
            let left = Point {
                x: lo + d,
                from_left: base_left + d,
                from_right: base_right + (span - d),
            };
            let fl = f(left);
            *evals += 1;
            if t == 0.0 {
                return check(fl * w, left.x);
            }
            let right = Point {
                x: hi - d,
                from_left: base_left + (span - d),
                from_right: base_right + d,
            };
            let fr = f(right);
            *evals += 1;
            let s = check(fl * w, left.x)? + check(fr * w, right.x)?;
            Ok(s)
        };

        let mut h = 1.0;
        let mut sum = eval(0.0)?;
        let mut k = 1;
        while (k as f64) * h <= T_MAX {
            sum += eval(k as f64 * h)?;
            k += 1;
        }
        let mut estimate = hw * h * sum;
        let mut error = f64::INFINITY;
        for level in 1..=self.max_level {
            h *= 0.5;
            let mut k = 1;
            while (k as f64) * h <= T_MAX {
                sum += eval(k as f64 * h)?;
                k += 2;
            }
            let next = hw * h * sum;
            error = (next - estimate).abs();
            estimate = next;
            let tol = abs_tol.max(self.rel_tol * estimate.abs());
            if level >= 3 && error <= tol {
                return Ok(Panel {
                    value: estimate,
                    error,
                    converged: true,
                });
            }
        }
        Ok(Panel {
            value: estimate,
            error,
            converged: false,
        })
    }
}

struct Panel {
    value: f64,
    error: f64,
    converged: bool,
}

fn check(v: f64, x: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Quadrature(format!("integrand is {v} at x = {x:e}")))
    }
}
