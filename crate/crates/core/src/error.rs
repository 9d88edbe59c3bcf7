use thiserror::Error;

/// Errors raised by curve handling, cost sources and the DP engines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("invalid cost matrix: {0}")]
    InvalidMatrix(String),

    #[error("cost grid is empty")]
    EmptyGrid,

    #[error("invalid band parameters: {0}")]
    InvalidBand(String),

    #[error("brute force is limited to n + m <= {limit}, got {got}")]
    TooLarge { limit: usize, got: usize },

    #[error("dump of {cells} cells exceeds the cap of {cap} cells")]
    DumpTooLarge { cells: usize, cap: usize },

    #[error("invalid generator parameters: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
