use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("element has infinite order: {0}")]
    InfiniteOrder(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("no decomposition: {0}")]
    NoDecomposition(String),
    #[error("group is not small: {0}")]
    NotSmall(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True when the error reflects a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}
