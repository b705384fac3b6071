//! Exact-arithmetic kernels for continued fractions attached to
//! cycle-alternating permutations and alternating Laguerre digraphs.
//!
//! The crate is organized as a small stack:
//!
//! * [`polyring`] — sparse multivariate polynomials over big integers, with
//!   a shared variable-registry mechanism and unreduced rational functions;
//! * [`cfkernel`] — S-/J-fraction expansion, generalized Jacobi-Rogers and
//!   Stieltjes-Rogers triangles, contraction, and coefficient extraction
//!   from series over rational functions;
//! * [`permstat`] — permutation classes and the record/cycle/crossing/
//!   nesting statistics, computed literally from their definitions;
//! * [`masterpolys`] — the generating-polynomial families over those
//!   classes and the continued fractions they satisfy;
//! * [`laguerre`] — Laguerre digraphs under both boundary conventions,
//!   their statistics, coefficient matrices, and exponential generating
//!   functions;
//! * [`appendixlab`] — J-fraction coefficients of the cycle-counting
//!   families as exact rational functions and their polynomiality verdicts;
//! * [`checks`] — a registry of named verification suites, one per theorem
//!   or printed computation, runnable from the CLI and the test harness.
//!
//! Everything is exact: no floating point, no tolerances.

pub mod appendixlab;
pub mod cfkernel;
pub mod checks;
pub mod laguerre;
pub mod masterpolys;
pub mod permstat;
pub mod polyring;
