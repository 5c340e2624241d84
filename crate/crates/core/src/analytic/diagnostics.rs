//! Side-by-side evaluation of the printed series representations against
//! the quadrature values they are meant to reproduce.
//!
//! Several of these series are formal expansions (divergent, asymptotic or
//! with ambiguous indices), so the report records what each evaluates to
//! rather than asserting agreement.

use std::fmt::Write as _;

use serde::Serialize;

use crate::distribution::BGParams;
use crate::error::Result;
use crate::series::{SeriesControl, SeriesSum};

use super::{
    cdf_hypergeometric, cdf_series, mgf, mgf_series, moment, moment_series,
    order_stat_moment, order_stat_moment_series, pdf_series, renyi_entropy,
    renyi_series_printed, MomentReading,
};

/// Term budget for each level of a nested series in the report.
pub const NESTED_BUDGET: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Converged and within 1e-6 relative of the oracle.
    Agrees,
    /// Converged to a finite value away from the oracle.
    Disagrees,
    /// Budget exhausted, non-finite terms, or an undefined logarithm.
    NotConverged,
    /// The oracle itself is undefined (e.g. a divergent integral).
    NoOracle,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagnosticRow {
    pub quantity: &'static str,
    pub reading: &'static str,
    /// (θ, γ, α, β)
    pub params: [f64; 4],
    /// Moment order, MGF argument, Rényi order or evaluation point.
    pub argument: f64,
    pub series_value: Option<f64>,
    pub terms: usize,
    pub converged: bool,
    pub oracle: Option<f64>,
    pub abs_diff: Option<f64>,
    pub verdict: Verdict,
    /// Error raised while evaluating the series, if any.
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagnosticsReport {
    pub series_control: SeriesControl,
    pub nested_budget: usize,
    pub rows: Vec<DiagnosticRow>,
}

/// Parameter sets exercised by the report, as (θ, γ, α, β).
pub const REPORT_PARAMS: [[f64; 4]; 4] = [
    [1.0, 1.0, 1.0, 1.0],
    [1.0, 0.5, 2.0, 2.0],
    [0.5, 0.5, 0.5, 0.5],
    [2.0, 1.0, 2.0, 3.0],
];

fn row(
    quantity: &'static str,
    reading: &'static str,
    p: &BGParams,
    argument: f64,
    series: Result<SeriesSum>,
    oracle: Result<f64>,
) -> DiagnosticRow {
    let oracle = oracle.ok().filter(|v| v.is_finite());
    let (value, terms, converged, note) = match series {
        Ok(s) => (Some(s.value).filter(|v| v.is_finite()), s.terms, s.converged, None),
        Err(e) => (None, 0, false, Some(e.to_string())),
    };
    let converged = converged && value.is_some();
    let abs_diff = match (value, oracle) {
        (Some(v), Some(o)) => Some((v - o).abs()),
        _ => None,
    };
    let verdict = match (converged, oracle, abs_diff) {
        (_, None, _) => Verdict::NoOracle,
        (false, _, _) => Verdict::NotConverged,
        (true, Some(o), Some(d)) if d <= 1e-6 * o.abs().max(1.0) => Verdict::Agrees,
        _ => Verdict::Disagrees,
    };
    DiagnosticRow {
        quantity,
        reading,
        params: p.to_array(),
        argument,
        series_value: value,
        terms,
        converged,
        oracle,
        abs_diff,
        verdict,
        note,
    }
}

/// Evaluates every series representation on [`REPORT_PARAMS`].
pub fn printed_series_report(ctl: &SeriesControl) -> Result<DiagnosticsReport> {
    let nested = SeriesControl::new(ctl.max_terms.min(NESTED_BUDGET), ctl.abs_tol)?;
    let mut rows = Vec::new();
    for raw in REPORT_PARAMS {
        let p = BGParams::from_array(raw)?;
        let median = p.quantile(0.5)?;
        let single = |s: Result<f64>| {
            s.map(|value| SeriesSum {
                value,
                terms: 0,
                converged: true,
                last_term: 0.0,
            })
        };
        rows.push(row(
            "cdf_mixture",
            "as printed",
            &p,
            median,
            single(cdf_series(median, &p, ctl)),
            p.cdf(median),
        ));
        rows.push(row(
            "pdf_mixture",
            "as printed",
            &p,
            median,
            single(pdf_series(median, &p, ctl)),
            p.pdf(median),
        ));
        rows.push(row(
            "cdf_hypergeometric",
            "as printed",
            &p,
            median,
            single(cdf_hypergeometric(median, &p, ctl)),
            p.cdf(median),
        ));
        for k in [1u32, 2] {
            for (reading, label) in [
                (MomentReading::Literal, "s read as k"),
                (MomentReading::CorrectedIndex, "bracket indexed by r"),
            ] {
                rows.push(row(
                    "moment",
                    label,
                    &p,
                    k as f64,
                    moment_series(k, &p, &nested, reading),
                    moment(k, &p),
                ));
            }
        }
        for t in [p.gamma, 0.5 * p.gamma] {
            rows.push(row(
                "mgf",
                "as printed",
                &p,
                t,
                mgf_series(t, &p, &nested),
                mgf(t, &p),
            ));
        }
        for lambda in [0.5, 2.0, 3.0] {
            for (j0, label) in [(false, "sum from j=1"), (true, "sum from j=0")] {
                rows.push(row(
                    "renyi",
                    label,
                    &p,
                    lambda,
                    renyi_series_printed(lambda, &p, ctl, j0),
                    renyi_entropy(lambda, &p),
                ));
            }
        }
        rows.push(row(
            "order_stat_moment_2_of_3",
            "as printed",
            &p,
            1.0,
            order_stat_moment_series(1, 2, 3, &p, &nested),
            order_stat_moment(1, 2, 3, &p),
        ));
    }
    Ok(DiagnosticsReport {
        series_control: *ctl,
        nested_budget: nested.max_terms,
        rows,
    })
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.10e}"))
}

impl DiagnosticsReport {
    /// Fixed-width text rendering.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<26} {:<22} {:<26} {:>8} {:>18} {:>18} {:>12} {:>6} {:<13} note",
            "quantity", "reading", "params(θ,γ,α,β)", "arg", "series", "oracle", "|diff|",
            "terms", "verdict"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<26} {:<22} {:<26} {:>8.4} {:>18} {:>18} {:>12} {:>6} {:<13} {}",
                r.quantity,
                r.reading,
                format!("{:?}", r.params),
                r.argument,
                fmt_opt(r.series_value),
                fmt_opt(r.oracle),
                r.abs_diff.map_or_else(|| "-".into(), |d| format!("{d:.3e}")),
                r.terms,
                format!("{:?}", r.verdict),
                r.note.as_deref().unwrap_or("")
            );
        }
        out
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.rows.iter().filter(|r| r.verdict == verdict).count()
    }
}
