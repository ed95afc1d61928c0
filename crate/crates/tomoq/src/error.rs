//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong when constructing or checking states,
/// tomograms, and reports.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: max |A - A^H| = {residual:.3e} exceeds {tolerance:.1e}")]
    NotHermitian { residual: f64, tolerance: f64 },

    #[error("matrix is not unitary: max |U U^H - I| = {residual:.3e} exceeds {tolerance:.1e}")]
    NotUnitary { residual: f64, tolerance: f64 },

    #[error("trace is {actual} instead of 1")]
    TraceNotOne { actual: f64 },

    #[error("matrix is not positive semidefinite: smallest eigenvalue {min_eigenvalue:.3e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("entry length {len} does not match {rows}x{cols}")]
    BadEntryCount { rows: usize, cols: usize, len: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("keep set is empty")]
    EmptyKeepSet,

    #[error("factor position {position} invalid for a shape with {factors} factors")]
    BadPosition { position: usize, factors: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("padding target {target} is smaller than current dimension {current}")]
    TargetTooSmall { target: usize, current: usize },

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("spin label 2j = {two_j} exceeds the supported range")]
    BadSpin { two_j: usize },

    #[error("q = {q} is outside the supported range q >= 1")]
    QOutOfRange { q: f64 },

    #[error("rank {rank} is not in 1..={dim}")]
    BadRank { rank: usize, dim: usize },

    #[error("unitary factors do not form a product for the given shape: {0}")]
    NonProductInput(String),

    #[error("probability entry {value:.3e} is more negative than the clamping floor")]
    NegativeProbability { value: f64 },

    #[error("probabilities sum to {sum} instead of 1")]
    NotNormalized { sum: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
