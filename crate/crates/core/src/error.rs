use thiserror::Error;

/// Errors raised by the exact core and the tools built on it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not square-free (decompose it first)")]
    NotSquareFree,

    #[error("expected a polynomial of degree {expected}, got degree {found:?}")]
    DegreeMismatch { expected: usize, found: Option<usize> },

    #[error("alpha must be greater than -1, got {0}")]
    AlphaOutOfRange(String),

    #[error("index {index} is out of range: {reason}")]
    IndexOutOfRange { index: usize, reason: &'static str },

    #[error("sequence has only {available} known terms, but index {requested} was needed")]
    InsufficientPrefix { available: usize, requested: usize },

    #[error("operator symbol sum is not constant in x: {0}")]
    NonConstantSymbolSum(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
