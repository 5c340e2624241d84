//! The beta-Gompertz lifetime distribution BG(θ, γ, α, β): density,
//! distribution, hazard, quantiles and sampling, series and quadrature
//! representations of moments, entropies and order statistics, and
//! maximum-likelihood fitting of BG and its five nested sub-models.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod cli;
pub mod datasets;
pub mod distribution;
pub mod error;
pub mod quadrature;
pub mod series;
pub mod simulation;
pub mod specfun;
pub mod submodels;
pub mod inference;

pub use distribution::{gompertz_cdf, BGParams};
pub use error::{Error, Result};
pub use series::SeriesControl;
