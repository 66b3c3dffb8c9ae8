use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, UqpError>;

#[derive(Debug, Error)]
pub enum UqpError {
    #[error("matrix is empty")]
    EmptyMatrix,

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not Hermitian: |r[{row}][{col}] - conj(r[{col}][{row}])| = {deviation:e}")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("eigensolver did not converge after {iterations} iterations (residual {residual:e})")]
    ConvergenceFailure { iterations: usize, residual: f64 },

    #[error("covariance matrix is not positive definite (smallest eigenvalue {min_eigenvalue:e})")]
    SingularCovariance { min_eigenvalue: f64 },

    #[error("prefix of length {len} leaves no free entry in an instance of size {n}")]
    PrefixTooLong { len: usize, n: usize },

    #[error("instance too large for exhaustive search: N = {n}, M = {grid}")]
    InstanceTooLarge { n: usize, grid: usize },

    #[error("operation requires N = {expected}, got N = {actual}")]
    WrongDimension { expected: usize, actual: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("no records for method {method} at N = {n}")]
    NoMatchingRecords { method: String, n: usize },

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl UqpError {
    pub fn is_io(&self) -> bool {
        matches!(self, UqpError::Io(_))
    }
}

impl From<csv::Error> for UqpError {
    fn from(err: csv::Error) -> Self {
        if err.is_io_error() {
            match err.into_kind() {
                csv::ErrorKind::Io(io) => UqpError::Io(io),
                _ => unreachable!(),
            }
        } else {
            UqpError::Parse(err.to_string())
        }
    }
}
