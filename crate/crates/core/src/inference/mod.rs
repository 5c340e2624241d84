//! Maximum-likelihood inference for the BG family and its sub-models.

mod data;
mod fit;
mod gof;
mod likelihood;
mod optimize;

pub use data::Dataset;
pub use fit::{fit_mle, gompertz_seed, starting_points, std_errors, FitOptions, FitResult, MIN_FIT_SIZE};
pub use gof::{
    information_criteria, ks_test, lrt, GofReport, InformationCriteria, KsResult, LrtResult,
};
pub use likelihood::{
    family_log_likelihood, family_observed_information, family_score, log_likelihood,
    observed_information, score, Score, ScoreWorkspace,
};
pub use optimize::FitStatus;
