//! Exact sparse multivariate polynomial and rational-function arithmetic
//! over arbitrary-precision integers.
//!
//! All generating polynomials in this crate are values of [`MultiPoly`],
//! built against a fixed [`VarRegistry`] that pins the variable order.
//! The canonical monomial order everywhere is graded lexicographic with
//! the registry order; serialization sorts terms graded-lex descending.
//!
//! [`RatFunc`] is an unreduced fraction of two polynomials.  Equality is
//! cross-multiplication; only integer-content stripping is ever applied,
//! never multivariate gcd.

mod json;
mod poly;
mod ratfunc;
mod registry;

pub use json::{poly_from_json_str, poly_to_json_string, ratfunc_to_json_string, PolyJson};
pub use poly::{Mono, MultiPoly};
pub use ratfunc::RatFunc;
pub use registry::VarRegistry;

use thiserror::Error;

/// Errors raised by polynomial and rational-function operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("operands belong to different variable registries")]
    RegistryMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("exact division left a nonzero remainder")]
    NotDivisible,
    #[error("malformed polynomial data: {0}")]
    Malformed(String),
}
