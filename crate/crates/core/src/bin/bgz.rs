use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use beta_gompertz::cli::{run, Command, OutputFormat, RunConfig, EXIT_VALIDATION};
use beta_gompertz::submodels::ModelFamily;
use beta_gompertz::SeriesControl;
use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Sub {
    Eval,
    Sample,
    Fit,
    Compare,
    Simstudy,
    Shape,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

/// Beta-Gompertz distribution: evaluate, sample, fit and compare.
#[derive(Debug, Parser)]
#[command(name = "bgz", version)]
struct Args {
    #[arg(value_enum)]
    command: Sub,
    /// E, GE, BE, G, GG or BG
    #[arg(long, default_value = "BG", value_parser = parse_family)]
    family: ModelFamily,
    /// theta,gamma,alpha,beta (or just the family's free parameters)
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    params: Option<Vec<f64>>,
    /// Lifetimes file for fit/compare, probe points for eval
    #[arg(long)]
    data: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Sample size
    #[arg(long)]
    n: Option<usize>,
    /// Monte Carlo replications
    #[arg(long, default_value_t = 100)]
    reps: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, default_value_t = SeriesControl::default().max_terms)]
    series_max_terms: usize,
    #[arg(long, default_value_t = SeriesControl::default().abs_tol)]
    series_tol: f64,
    /// Grid points for eval curves and shape sweeps
    #[arg(long)]
    curve: Option<usize>,
    /// With sample: also emit (value, ecdf, model cdf)
    #[arg(long)]
    with_ecdf: bool,
    /// Probe points for eval
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    at: Vec<f64>,
    /// Probabilities for eval quantiles
    #[arg(long, value_delimiter = ',')]
    probs: Vec<f64>,
    /// Write the report to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<ModelFamily, String> {
    s.parse().map_err(|e: beta_gompertz::Error| e.to_string())
}

fn config(a: Args) -> Result<RunConfig, String> {
    let command = match a.command {
        Sub::Eval => Command::Eval,
        Sub::Sample => Command::Sample,
        Sub::Fit => Command::Fit,
        Sub::Compare => Command::Compare,
        Sub::Simstudy => Command::Simstudy,
        Sub::Shape => Command::Shape,
    };
    let series = SeriesControl::new(a.series_max_terms, a.series_tol).map_err(|e| e.to_string())?;
    Ok(RunConfig {
        command,
        family: a.family,
        params: a.params,
        data: a.data,
        seed: a.seed,
        n: a.n,
        reps: a.reps,
        format: match a.format {
            Format::Json => OutputFormat::Json,
            Format::Table => OutputFormat::Table,
        },
        series,
        curve: a.curve,
        with_ecdf: a.with_ecdf,
        at: a.at,
        probs: a.probs,
        out: a.out,
    })
}

fn main() -> ExitCode {
    let cfg = match config(Args::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("bgz: {e}");
            return ExitCode::from(EXIT_VALIDATION as u8);
        }
    };
    match run(&cfg) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.text.as_bytes());
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("bgz: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
