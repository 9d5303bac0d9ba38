//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("mismatched kappa: {left} vs {right}")]
    MismatchedKappa { left: usize, right: usize },

    #[error("{kind} index {index} out of range for kappa = {kappa}")]
    IndexOutOfRange {
        kind: &'static str,
        index: usize,
        kappa: usize,
    },

    /// Exact division by (1 - X_i X_{i+1}^-1) failed; the remainder is
    /// rendered so callers can inspect what was left over.
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: String },

    #[error("character undefined on letter {letter}")]
    UnsupportedLetter { letter: String },

    #[error("exponent box too small: {0}")]
    BoxTooSmall(String),

    #[error("quotient slice of total degree {degree} has dimension {dimension}, expected {expected}")]
    InconsistentQuotient {
        degree: i64,
        dimension: usize,
        expected: usize,
    },

    #[error("operator Y_{index} leaves the support span of {composition:?}")]
    NonInvariantSupport { index: usize, composition: Vec<i64> },

    #[error("joint eigenspace for composition {composition:?} has dimension {dimension}")]
    DegenerateEigenspace {
        composition: Vec<i64>,
        dimension: usize,
    },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
