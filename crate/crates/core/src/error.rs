use thiserror::Error;

/// Errors raised by constructions and decision procedures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("column {column} is not normalized (sums to {sum})")]
    NotNormalized { column: usize, sum: String },

    #[error("entry {value} at ({row}, {column}) is outside the semiring's value range")]
    InvalidEntry {
        row: usize,
        column: usize,
        value: String,
    },

    #[error("invalid object: {0}")]
    InvalidObject(String),

    #[error("invalid factor split: {0}")]
    InvalidSplit(String),

    #[error("label {0:?} not found")]
    UnknownLabel(String),

    #[error("morphism is not deterministic: {0}")]
    NotDeterministic(String),

    #[error("marginals on the shared object differ: left {left:?}, right {right:?}")]
    MarginalMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("size bound exceeded: {size} > {bound}")]
    SizeBound { size: u128, bound: u128 },

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("matrix is not positive semidefinite (smallest eigenvalue {0:e})")]
    NotPsd(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
