use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{function}: argument {value} is outside the domain ({reason})")]
    Domain {
        function: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("{function}: no convergence after {iterations} iterations")]
    Convergence {
        function: &'static str,
        iterations: usize,
    },
    #[error("{function}: series did not reach tolerance within {terms} terms (last term {last_term:e})")]
    SeriesNotConverged {
        function: &'static str,
        terms: usize,
        last_term: f64,
    },
    #[error("quadrature failed: {0}")]
    Quadrature(String),
    #[error("{0} is not finite")]
    NonFinite(&'static str),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("degenerate data: all {0} values are identical")]
    DegenerateData(usize),
    #[error("likelihood ratio statistic {0} is negative; the fuller model fit probably failed")]
    LrtOrdering(f64),
    #[error("{nested} is not nested in {full}")]
    NotNested { nested: String, full: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(function: &'static str, value: f64, reason: &'static str) -> Error {
    Error::Domain {
        function,
        value,
        reason,
    }
}
