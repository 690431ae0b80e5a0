//! Exact arithmetic for Jacobi forms of lattice index.
//!
//! The crate computes with formal Fourier expansions of Jacobi forms whose
//! index is an even positive definite lattice, and with the divisor data such
//! forms contribute to reflective Borcherds products on orthogonal groups of
//! signature (2, n). Everything is exact: coefficients are big rationals,
//! lattice enumeration uses rational Cholesky data, and no floating point
//! ever reaches a result.
//!
//! Organization:
//!
//! * [`lattice`]: even lattices, dual vectors, discriminant groups, exact
//!   short-vector enumeration.
//! * [`qseries`]: scalar q-expansions (Eisenstein series, the discriminant
//!   cusp form and its inverse).
//! * [`jacobi`]: lattice-index Fourier expansions, theta series, the heat
//!   operator, the weight-0 constant-term identity, and the classical
//!   index-one generators.
//! * [`reflective`]: divisor extraction from singular Fourier coefficients,
//!   weight formulas for 2-reflective and prime-level reflective forms, the
//!   differential-operator chains and the rank classification built on them.
//! * [`dd`]: enumeration of lattices that can carry reflective forms whose
//!   divisor is supported on diagonal-type classes.
//! * [`cli`]: the report-producing commands behind the `jacobi-forms` binary.
//!
//! The `examples/` directory of this crate has one runnable program per major
//! capability; `cargo run --example two_reflective_weights` is a good start.

pub mod cli;
pub mod dd;
pub mod jacobi;
pub mod lattice;
pub mod qseries;
pub mod rat;
pub mod reflective;
pub mod report;

pub use lattice::{CosetClass, DualVector, IntegerLattice};
pub use qseries::QSeries;
pub use rat::Rat;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A Gram matrix failed validation (not symmetric, not even, or not
    /// positive definite).
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    /// An argument violated a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Coefficient requested outside the window where the expansion is valid.
    #[error("exponent {n} outside valid window [{lo}, {hi})")]
    OutOfWindow { n: i64, lo: i64, hi: i64 },

    /// A product or quotient would leave no usable truncation window.
    #[error("operation leaves truncation window {trunc} < 1")]
    WindowTooSmall { trunc: i64 },

    /// Scalar series without a weight tag used where a weight is required.
    #[error("scalar series has no weight tag")]
    MissingWeightTag,

    /// Declared weight does not match the expansion's stored weight.
    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: String, found: String },

    /// The singular part of an expansion does not have the shape cut out by
    /// reflective divisor data.
    #[error("not a reflective input: {0}")]
    NotReflective(String),

    /// A singular Fourier coefficient is negative, so the associated
    /// Borcherds product would not be holomorphic.
    #[error("non-holomorphic product: {0}")]
    NonHolomorphic(String),

    /// A linear solve had no solution matching the requested data.
    #[error("no solution: {0}")]
    NoSolution(String),

    /// A linear solve that should pin a unique form left free parameters.
    #[error("solution not unique: solution space has dimension {dimension}")]
    NonUnique { dimension: usize },

    /// Construction self-check failed (an internal identity did not hold).
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
