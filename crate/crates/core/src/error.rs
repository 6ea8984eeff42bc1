use thiserror::Error;

/// Errors raised by the categorical operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid quantale: {0}")]
    InvalidQuantale(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not representable over the scalar field: {0}")]
    NotRepresentable(String),
    #[error("law violated: {0}")]
    LawViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(message: impl Into<String>) -> Self {
        Error::Parse {
            line: 1,
            column: 1,
            message: message.into(),
        }
    }
}
