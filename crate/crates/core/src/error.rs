use thiserror::Error;

/// Errors raised by the exact computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("odd variable index {index} out of range 1..={max}")]
    OddIndexOutOfRange { index: usize, max: usize },
    #[error("polynomial is not homogeneous of degree {0}")]
    NonHomogeneous(usize),
    #[error("operator does not have a single degree shift: {0}")]
    ShiftMismatch(String),
    #[error("operator does not act by a scalar on V{nu}: {detail}")]
    NonScalarAction { nu: String, detail: String },
    #[error("Casimir calibration failed: {0}")]
    Calibration(String),
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
