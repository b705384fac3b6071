//! Continued-fraction machinery.
//!
//! The generic S-fraction `1/(1 - a1 t/(1 - a2 t/...))` and J-fraction
//! `1/(1 - g0 t - b1 t^2/(1 - g1 t - ...))` are expanded through the
//! triangular recurrences for the generalized Stieltjes-Rogers and
//! Jacobi-Rogers polynomials.  Coefficient extraction from a given series
//! works over a field of rational functions and is the inverse of
//! expansion wherever the pivots are regular.

mod extract;
pub mod pathoracle;
mod series;

pub use extract::{
    j_series_rat, s_series_rat, series_to_j, series_to_s, RatJFraction, RatSFraction,
};
pub use series::{
    contract, j_series, jr_matrix, jr_matrix_weighted, s_series, sr_matrices, ContractionParity,
    JFractionSpec, SFractionSpec, SeriesVec, TriKind, TriMatrix,
};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CfError {
    #[error("coefficient sequences cover depth {have}, need {need}")]
    Depth { need: usize, have: usize },
    #[error("series must start with constant term 1")]
    NotNormalized,
    #[error("pivot at level {0} is zero with a nonzero tail; no regular continued fraction")]
    NotRegular(usize),
    #[error(transparent)]
    Poly(#[from] crate::polyring::PolyError),
}
