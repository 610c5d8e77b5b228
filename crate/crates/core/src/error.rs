use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition text {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("index out of range: {0}")]
    Index(String),

    #[error("cell ({row}, {col}) lies outside the diagram of {partition}")]
    CellOutside {
        partition: String,
        row: usize,
        col: usize,
    },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("n = {n} exceeds the brute-force limit {limit}")]
    BruteForceLimit { n: usize, limit: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("corrupt cache file {path}: {reason}")]
    CorruptCache { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
