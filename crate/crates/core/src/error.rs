use thiserror::Error;

use crate::combinatorics::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: String },

    #[error("invalid subset {elements:?} of 1..={n}: {reason}")]
    InvalidSubset {
        n: usize,
        elements: Vec<usize>,
        reason: String,
    },

    #[error("partition {partition} does not fit in the {rows}x{cols} rectangle")]
    OutsideRectangle {
        partition: Partition,
        rows: usize,
        cols: usize,
    },

    #[error("multiplicity counter overflowed 64 bits")]
    Overflow,

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary (deviation {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("singular value {value} is not positive")]
    NonPositiveSingularValue { value: f64 },

    #[error("product of singular values is {product}, expected 1")]
    DeterminantModulus { product: f64 },

    #[error("exponents sum to {sum}, which is not an integer")]
    NonIntegerTrace { sum: f64 },

    #[error("unitary spectrum is not normalized: {0}")]
    NotNormalized(String),

    #[error("internal error: {0}")]
    Internal(String),
}
