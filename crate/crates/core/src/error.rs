use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("repeated entries in x: {0}")]
    RepeatedEntries(String),
    #[error("generator index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("unknown relation set `{0}`")]
    UnknownSet(String),
    #[error("no catalogue for n = {0}")]
    UnsupportedDimension(usize),
    #[error("bracket table has no entry for ({0}, {1})")]
    MissingBracket(usize, usize),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
