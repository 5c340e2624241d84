//! Command implementations behind the `bgz` binary.
//!
//! Every command turns a [`RunConfig`] into an [`Outcome`]: rendered text
//! plus the process exit code. Numbers in JSON output carry 10 significant
//! digits; the layout of each report is described in `docs/output-schema.md`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::analytic::{bowley_skewness, cdf_series, moors_kurtosis};
use crate::error::Error;
use crate::inference::{
    fit_mle, ks_test, lrt, Dataset, FitOptions, FitResult, GofReport, LrtResult,
};
use crate::series::SeriesControl;
use crate::simulation::{desk_scenarios, run_scenario, Scenario};
use crate::submodels::{
    family_cdf, family_log_pdf, family_quantile, family_sample_with, family_sf, ModelFamily,
    ModelSpec, Param,
};
use crate::BGParams;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_CONVERGENCE: i32 = 4;

/// Significant digits of every number in JSON output.
pub const JSON_DIGITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Eval,
    Sample,
    Fit,
    Compare,
    Simstudy,
    Shape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub family: ModelFamily,
    /// Either the full (θ, γ, α, β) quadruple or the family's free
    /// parameters in (θ, γ, α, β) order.
    pub params: Option<Vec<f64>>,
    pub data: Option<PathBuf>,
    pub seed: u64,
    pub n: Option<usize>,
    pub reps: usize,
    pub format: OutputFormat,
    pub series: SeriesControl,
    /// Grid size for `eval` curves and `shape` sweeps.
    pub curve: Option<usize>,
    pub with_ecdf: bool,
    /// Probe points for `eval`.
    pub at: Vec<f64>,
    /// Probabilities for quantiles in `eval`.
    pub probs: Vec<f64>,
    /// Write the report here instead of returning it for stdout.
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            family: ModelFamily::BG,
            params: None,
            data: None,
            seed: 1,
            n: None,
            reps: 100,
            format: OutputFormat::Json,
            series: SeriesControl::default(),
            curve: None,
            with_ecdf: false,
            at: Vec::new(),
            probs: Vec::new(),
            out: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(m) => CliError::Io(m),
            other => CliError::Validation(other.to_string()),
        }
    }
}

/// Rendered report and exit code of a command that produced output.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

type CliResult<T> = std::result::Result<T, CliError>;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// Rounds to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if let Some(f) = n.as_f64().filter(|_| !n.is_i64() && !n.is_u64()) {
                if let Some(r) = serde_json::Number::from_f64(round_sig(f, JSON_DIGITS)) {
                    *n = r;
                }
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_value),
        Value::Object(o) => o.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Pretty JSON with every float rounded to [`JSON_DIGITS`] significant
/// digits. Non-finite numbers become `null`.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).unwrap_or(Value::Null);
    round_value(&mut v);
    let mut s = serde_json::to_string_pretty(&v).unwrap_or_default();
    s.push('\n');
    s
}

fn sig(x: f64) -> String {
    if x.is_finite() {
        format!("{}", round_sig(x, 7))
    } else {
        "-".into()
    }
}

fn model_spec(cfg: &RunConfig) -> CliResult<ModelSpec> {
    let values = cfg
        .params
        .as_ref()
        .ok_or_else(|| invalid(format!("{:?} needs --params", cfg.command).to_lowercase()))?;
    let spec = if values.len() == 4 {
        let full = [values[0], values[1], values[2], values[3]];
        if let Some(v) = full.iter().find(|v| !v.is_finite()) {
            return Err(invalid(format!("parameter {v} is not finite")));
        }
        ModelSpec::from_full(cfg.family, full)?
    } else if values.len() == cfg.family.n_params() {
        ModelSpec::new(cfg.family, values.clone())?
    } else {
        return Err(invalid(format!(
            "--params takes 4 values (theta,gamma,alpha,beta) or the {} free parameters of {}",
            cfg.family.n_params(),
            cfg.family
        )));
    };
    Ok(spec)
}

fn bg_params(cfg: &RunConfig) -> CliResult<BGParams> {
    if cfg.family != ModelFamily::BG {
        return Err(invalid(format!("{:?} supports only --family BG", cfg.command).to_lowercase()));
    }
    let spec = model_spec(cfg)?;
    Ok(BGParams::from_array(spec.full())?)
}

fn require_data(cfg: &RunConfig) -> CliResult<Dataset> {
    let path = cfg
        .data
        .as_ref()
        .ok_or_else(|| invalid(format!("{:?} needs --data", cfg.command).to_lowercase()))?;
    Ok(Dataset::from_file(path)?)
}

fn read_probe_file(path: &Path) -> CliResult<Vec<f64>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.parse::<f64>()
                .map_err(|_| invalid(format!("probe '{l}' is not a number")))
        })
        .collect()
}

/// Runs a command and writes the report to `cfg.out` when set.
pub fn run(cfg: &RunConfig) -> CliResult<Outcome> {
    if let Some(n) = cfg.n {
        if n == 0 {
            return Err(invalid("--n must be positive"));
        }
    }
    if cfg.reps == 0 {
        return Err(invalid("--reps must be positive"));
    }
    let outcome = match cfg.command {
        Command::Eval => cmd_eval(cfg)?,
        Command::Sample => cmd_sample(cfg)?,
        Command::Fit => cmd_fit(cfg)?,
        Command::Compare => cmd_compare(cfg)?,
        Command::Simstudy => cmd_simstudy(cfg)?,
        Command::Shape => cmd_shape(cfg)?,
    };
    if let Some(path) = &cfg.out {
        std::fs::write(path, &outcome.text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
        return Ok(Outcome {
            text: String::new(),
            exit_code: outcome.exit_code,
        });
    }
    Ok(outcome)
}

fn ok(text: String) -> Outcome {
    Outcome {
        text,
        exit_code: EXIT_OK,
    }
}

#[derive(Debug, Serialize)]
struct PointEval {
    x: f64,
    pdf: f64,
    cdf: f64,
    sf: f64,
    hrf: f64,
    /// Mixture-series cdf, BG-type families only; null when the series
    /// does not reach tolerance within the budget.
    #[serde(skip_serializing_if = "Option::is_none")]
    cdf_series: Option<Option<f64>>,
}

fn eval_point(x: f64, spec: &ModelSpec, series: Option<(&BGParams, &SeriesControl)>) -> CliResult<PointEval> {
    let lp = family_log_pdf(x, spec)?;
    let sf = family_sf(x, spec)?;
    let hrf = if sf > 0.0 { (lp - sf.ln()).exp() } else { f64::NAN };
    Ok(PointEval {
        x,
        pdf: lp.exp(),
        cdf: family_cdf(x, spec)?,
        sf,
        hrf,
        cdf_series: series.map(|(p, ctl)| cdf_series(x, p, ctl).ok()),
    })
}

/// pdf, cdf, sf and hazard at probe points, quantiles, and an optional
/// dense curve.
pub fn cmd_eval(cfg: &RunConfig) -> CliResult<Outcome> {
    let spec = model_spec(cfg)?;
    let bg = if cfg.family.has_gamma() {
        Some(BGParams::from_array(spec.full())?)
    } else {
        None
    };
    let series = bg.as_ref().map(|p| (p, &cfg.series));
    let mut probes = cfg.at.clone();
    if let Some(path) = &cfg.data {
        probes.extend(read_probe_file(path)?);
    }
    let points = probes
        .iter()
        .map(|&x| eval_point(x, &spec, series))
        .collect::<CliResult<Vec<_>>>()?;
    let quantiles = cfg
        .probs
        .iter()
        .map(|&u| Ok(json!({ "p": u, "x": family_quantile(u, &spec)? })))
        .collect::<CliResult<Vec<_>>>()?;
    let curve = match cfg.curve {
        Some(n) if n < 2 => return Err(invalid("--curve needs at least 2 points")),
        Some(n) => {
            let xmax = family_quantile(0.999, &spec)?;
            (0..n)
                .map(|i| eval_point(xmax * i as f64 / (n - 1) as f64, &spec, None))
                .collect::<CliResult<Vec<_>>>()?
        }
        None => Vec::new(),
    };
    if points.is_empty() && quantiles.is_empty() && curve.is_empty() {
        return Err(invalid("eval needs --at, --probs, --data or --curve"));
    }
    let text = match cfg.format {
        OutputFormat::Json => to_json(&json!({
            "command": "eval",
            "family": cfg.family,
            "params": spec.to_map(),
            "series_control": cfg.series,
            "points": points,
            "quantiles": quantiles,
            "curve": curve,
        })),
        OutputFormat::Table => {
            let mut s = format!("# {} {:?}\n", cfg.family, spec.to_map());
            let _ = writeln!(s, "{:>14} {:>14} {:>14} {:>14} {:>14}", "x", "pdf", "cdf", "sf", "hrf");
            for p in points.iter().chain(&curve) {
                let _ = writeln!(
                    s,
                    "{:>14} {:>14} {:>14} {:>14} {:>14}",
                    sig(p.x),
                    sig(p.pdf),
                    sig(p.cdf),
                    sig(p.sf),
                    sig(p.hrf)
                );
            }
            for q in &quantiles {
                let _ = writeln!(s, "quantile({}) = {}", q["p"], sig(q["x"].as_f64().unwrap_or(f64::NAN)));
            }
            s
        }
    };
    Ok(ok(text))
}

/// Seeded draws, optionally with the empirical and model cdf at each
/// sorted value.
pub fn cmd_sample(cfg: &RunConfig) -> CliResult<Outcome> {
    let spec = model_spec(cfg)?;
    let n = cfg.n.ok_or_else(|| invalid("sample needs --n"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let values = family_sample_with(&spec, n, &mut rng)?;
    let mut ecdf = Vec::new();
    let mut ks = None;
    if cfg.with_ecdf {
        let mut sorted = values.clone();
        sorted.sort_by(f64::total_cmp);
        for (i, &x) in sorted.iter().enumerate() {
            ecdf.push([x, (i + 1) as f64 / n as f64, family_cdf(x, &spec)?]);
        }
        ks = Some(ks_test(&values, |x| family_cdf(x, &spec))?);
    }
    let text = match cfg.format {
        OutputFormat::Json => to_json(&json!({
            "command": "sample",
            "family": cfg.family,
            "params": spec.to_map(),
            "seed": cfg.seed,
            "n": n,
            "values": values,
            "ecdf": ecdf,
            "ks": ks,
        })),
        OutputFormat::Table => {
            let mut s = String::new();
            if cfg.with_ecdf {
                let _ = writeln!(s, "# value ecdf model_cdf");
                for [x, e, c] in &ecdf {
                    let _ = writeln!(s, "{x} {e} {c}");
                }
            } else {
                for x in &values {
                    let _ = writeln!(s, "{x}");
                }
            }
            s
        }
    };
    Ok(ok(text))
}

#[derive(Debug, Serialize)]
struct FitReport<'a> {
    command: &'static str,
    data: Option<&'a Path>,
    n: usize,
    family: ModelFamily,
    fit: &'a FitResult,
    gof: Option<GofReport>,
}

fn fit_table_row(f: &FitResult, gof: Option<&GofReport>) -> String {
    let est: Vec<String> = f
        .family
        .free_params()
        .iter()
        .zip(&f.estimate.values)
        .map(|(p, v)| {
            let se = f
                .std_errors
                .as_ref()
                .map_or("-".to_string(), |m| sig(m[p.name()]));
            format!("{}={} ({se})", p.name(), sig(*v))
        })
        .collect();
    let g = gof.map_or_else(
        || "-".to_string(),
        |g| {
            format!(
                "K-S {} p {}  AIC {} AICC {} BIC {}",
                sig(g.ks_stat),
                sig(g.ks_pvalue),
                sig(g.aic),
                sig(g.aicc),
                sig(g.bic)
            )
        },
    );
    format!(
        "{:<3} -logL {:<12} {}  {}  [{:?}]",
        f.family.to_string(),
        sig(-f.loglik),
        est.join(" "),
        g,
        f.status
    )
}

/// Maximum-likelihood fit of one family, exit code 4 when it did not
/// converge.
pub fn cmd_fit(cfg: &RunConfig) -> CliResult<Outcome> {
    let d = require_data(cfg)?;
    let fit = fit_mle(&d, cfg.family, &FitOptions::default())?;
    let gof = GofReport::for_fit(&d, &fit).ok();
    let text = match cfg.format {
        OutputFormat::Json => to_json(&FitReport {
            command: "fit",
            data: cfg.data.as_deref(),
            n: d.n(),
            family: cfg.family,
            fit: &fit,
            gof,
        }),
        OutputFormat::Table => fit_table_row(&fit, gof.as_ref()) + "\n",
    };
    Ok(Outcome {
        text,
        exit_code: if fit.converged() { EXIT_OK } else { EXIT_CONVERGENCE },
    })
}

#[derive(Debug, Serialize)]
pub struct CompareRow {
    pub family: ModelFamily,
    pub fit: Option<FitResult>,
    pub gof: Option<GofReport>,
    /// Test of this family against BG; absent for BG itself.
    pub lrt_vs_bg: Option<LrtResult>,
    pub error: Option<String>,
}

/// Fits all six families, warm-starting each from the families nested in
/// it, and tests each sub-model against BG.
pub fn compare_families(d: &Dataset) -> Vec<CompareRow> {
    let mut fits: BTreeMap<&'static str, FitResult> = BTreeMap::new();
    let mut rows = Vec::new();
    for family in ModelFamily::ALL {
        let mut opts = FitOptions::default();
        for inner in ModelFamily::ALL {
            if !inner.nested_in(family) {
                continue;
            }
            if let Some(f) = fits.get(inner.label()) {
                let mut full = f.estimate.full();
                if !inner.has_gamma() && family.has_gamma() {
                    full[Param::Gamma.index()] = 1e-4 / d.mean();
                }
                if let Ok(s) = ModelSpec::from_full(family, full) {
                    opts.extra_starts.push(s);
                }
            }
        }
        match fit_mle(d, family, &opts) {
            Ok(f) => {
                fits.insert(family.label(), f);
            }
            Err(e) => rows.push(CompareRow {
                family,
                fit: None,
                gof: None,
                lrt_vs_bg: None,
                error: Some(e.to_string()),
            }),
        }
    }
    let bg = fits.get(ModelFamily::BG.label()).cloned();
    for family in ModelFamily::ALL {
        let Some(f) = fits.remove(family.label()) else { continue };
        let gof = GofReport::for_fit(d, &f).ok();
        let (lrt_vs_bg, error) = match (&bg, family) {
            (_, ModelFamily::BG) | (None, _) => (None, None),
            (Some(full), _) => match lrt(&f, full) {
                Ok(r) => (Some(r), None),
                Err(e) => (None, Some(e.to_string())),
            },
        };
        let error = error.or_else(|| (!f.converged()).then(|| format!("fit status {:?}", f.status)));
        rows.push(CompareRow {
            family,
            fit: Some(f),
            gof,
            lrt_vs_bg,
            error,
        });
    }
    rows.sort_by_key(|r| ModelFamily::ALL.iter().position(|f| *f == r.family));
    rows
}

/// All six families side by side.
pub fn cmd_compare(cfg: &RunConfig) -> CliResult<Outcome> {
    let d = require_data(cfg)?;
    let rows = compare_families(&d);
    let text = match cfg.format {
        OutputFormat::Json => to_json(&json!({
            "command": "compare",
            "data": cfg.data,
            "n": d.n(),
            "rows": rows,
        })),
        OutputFormat::Table => {
            let mut s = String::new();
            for r in &rows {
                match &r.fit {
                    Some(f) => s += &fit_table_row(f, r.gof.as_ref()),
                    None => s += &format!("{:<3} failed", r.family.to_string()),
                }
                if let Some(l) = &r.lrt_vs_bg {
                    let _ = write!(s, "  LRT vs BG {} (df {}, p {})", sig(l.stat), l.df, sig(l.pvalue));
                }
                if let Some(e) = &r.error {
                    let _ = write!(s, "  error: {e}");
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(ok(text))
}

/// Monte Carlo study of the BG estimator: either the built-in scenarios or
/// the one given by `--params` and `--n`.
pub fn cmd_simstudy(cfg: &RunConfig) -> CliResult<Outcome> {
    let scenarios: Vec<Scenario> = match &cfg.params {
        Some(_) => vec![Scenario {
            params: bg_params(cfg)?,
            n: cfg.n.unwrap_or(100),
        }],
        None => desk_scenarios()
            .into_iter()
            .filter(|s| cfg.n.map_or(true, |n| s.n == n))
            .collect(),
    };
    if scenarios.is_empty() {
        return Err(invalid("no built-in scenario has that --n; pass --params as well"));
    }
    if scenarios.iter().any(|s| s.n < crate::inference::MIN_FIT_SIZE) {
        return Err(invalid("simstudy needs --n of at least 5"));
    }
    let summaries = scenarios
        .iter()
        .map(|s| run_scenario(s, cfg.reps, cfg.seed))
        .collect::<crate::Result<Vec<_>>>()?;
    let text = match cfg.format {
        OutputFormat::Json => to_json(&json!({
            "command": "simstudy",
            "seed": cfg.seed,
            "reps": cfg.reps,
            "parameter_order": ["theta", "gamma", "alpha", "beta"],
            "scenarios": summaries,
        })),
        OutputFormat::Table => {
            let mut s = String::from("# columns in (theta, gamma, alpha, beta) order\n");
            for r in &summaries {
                let f = |a: &[f64; 4]| a.iter().map(|v| sig(*v)).collect::<Vec<_>>().join(" ");
                let _ = writeln!(
                    s,
                    "params {:?} n {}  ok {}/{}{}\n  mean   {}\n  median {}\n  sd     {}\n  info   {}",
                    r.scenario.params.to_array(),
                    r.scenario.n,
                    r.successes,
                    r.reps,
                    if r.flagged { "  FLAGGED" } else { "" },
                    f(&r.mean),
                    f(&r.median),
                    f(&r.sd),
                    f(&r.mean_info_se)
                );
            }
            s
        }
    };
    Ok(ok(text))
}

#[derive(Debug, Serialize)]
struct ShapeRow {
    varied: &'static str,
    value: f64,
    bowley: f64,
    moors: f64,
}

/// Bowley skewness and Moors kurtosis along log-spaced sweeps of γ, θ and
/// α from 0.1 to 10 times the given value, others held fixed.
pub fn cmd_shape(cfg: &RunConfig) -> CliResult<Outcome> {
    let base = bg_params(cfg)?;
    let n = cfg.curve.unwrap_or(21);
    if n < 2 {
        return Err(invalid("--curve needs at least 2 points"));
    }
    let mut rows = Vec::new();
    for param in [Param::Gamma, Param::Theta, Param::Alpha] {
        for i in 0..n {
            let factor = 10f64.powf(-1.0 + 2.0 * i as f64 / (n - 1) as f64);
            let mut a = base.to_array();
            a[param.index()] *= factor;
            let p = BGParams::from_array(a)?;
            rows.push(ShapeRow {
                varied: param.name(),
                value: a[param.index()],
                bowley: bowley_skewness(&p)?,
                moors: moors_kurtosis(&p)?,
            });
        }
    }
    let text = match cfg.format {
        OutputFormat::Json => to_json(&json!({
            "command": "shape",
            "params": base,
            "rows": rows,
        })),
        OutputFormat::Table => {
            let mut s = format!("{:<7} {:>14} {:>14} {:>14}\n", "varied", "value", "bowley", "moors");
            for r in &rows {
                let _ = writeln!(s, "{:<7} {:>14} {:>14} {:>14}", r.varied, sig(r.value), sig(r.bowley), sig(r.moors));
            }
            s
        }
    };
    Ok(ok(text))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::approx_constant)]
    fn rounding_keeps_ten_digits() {
        assert_eq!(round_sig(220.67184123456, 10), 220.6718412);
        assert_eq!(round_sig(-1.23456789012345e-7, 10), -1.234567890e-7);
        assert_eq!(round_sig(0.0, 10), 0.0);
        let s = to_json(&json!({"a": 1.0 / 3.0, "b": [2.0f64.sqrt()], "n": 5, "x": f64::NAN}));
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["a"].as_f64().unwrap(), 0.3333333333);
        assert_eq!(v["b"][0].as_f64().unwrap(), 1.414213562);
        assert_eq!(v["n"].as_u64().unwrap(), 5);
        assert!(v["x"].is_null());
    }

    #[test]
    fn eval_density_at_origin() {
        let mut cfg = RunConfig::new(Command::Eval);
        cfg.params = Some(vec![2.0, 1.0, 1.0, 3.0]);
        cfg.at = vec![0.0];
        cfg.probs = vec![0.5];
        let out = run(&cfg).unwrap();
        let v: Value = serde_json::from_str(&out.text).unwrap();
        assert!((v["points"][0]["pdf"].as_f64().unwrap() - 6.0).abs() < 1e-9);
        let x = v["quantiles"][0]["x"].as_f64().unwrap();
        let spec = ModelSpec::from_full(ModelFamily::BG, [2.0, 1.0, 1.0, 3.0]).unwrap();
        assert!((family_cdf(x, &spec).unwrap() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn params_accept_free_or_full_layouts() {
        let mut cfg = RunConfig::new(Command::Eval);
        cfg.family = ModelFamily::GE;
        cfg.params = Some(vec![0.5, 2.0]);
        assert_eq!(model_spec(&cfg).unwrap().values, vec![0.5, 2.0]);
        cfg.params = Some(vec![0.5, 9.0, 2.0, 1.0]);
        assert_eq!(model_spec(&cfg).unwrap().values, vec![0.5, 2.0]);
        cfg.params = Some(vec![0.5, 2.0, 3.0]);
        assert!(matches!(model_spec(&cfg), Err(CliError::Validation(_))));
        cfg.params = Some(vec![-0.5, 2.0]);
        assert_eq!(model_spec(&cfg).unwrap_err().exit_code(), EXIT_VALIDATION);
    }

    #[test]
    fn missing_file_is_an_io_error() {
        let mut cfg = RunConfig::new(Command::Fit);
        cfg.data = Some(PathBuf::from("/nonexistent/lifetimes.txt"));
        assert_eq!(run(&cfg).unwrap_err().exit_code(), EXIT_IO);
    }
}
