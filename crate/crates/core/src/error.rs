use thiserror::Error;

pub type Result<T> = std::result::Result<T, TilingError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("tiling count overflowed 64-bit arithmetic")]
    Overflow,
    #[error("enumeration truncated at {limit} tilings; result undecidable at this limit")]
    Truncated { limit: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub(crate) fn invalid(msg: impl Into<String>) -> TilingError {
    TilingError::InvalidArgument(msg.into())
}
