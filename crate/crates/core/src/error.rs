use thiserror::Error;

/// Everything that can go wrong while building or analysing a code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("format error on line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("coordinate {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("enumeration budget exceeded: dimension {k} is above the limit of {max_dim} (4^{max_dim} codewords)")]
    Budget { k: usize, max_dim: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("unknown catalog entry `{name}`; available: {}", available.join(", "))]
    UnknownCatalog { name: String, available: Vec<String> },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
