use thiserror::Error;

/// Errors raised by the algebra, series and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("context mismatch")]
    ContextMismatch,
    #[error("loop degree {found} exceeds requested degree {requested}")]
    DegreeOverflow { found: i64, requested: i64 },
    #[error("order {0} is beyond the truncation")]
    OutOfTruncation(usize),
    #[error("series is not unital")]
    NotUnital,
    #[error("matrix is not invertible over the series ring")]
    NotInvertible,
    #[error("parity: {0}")]
    Parity(String),
    #[error("requires p != 2")]
    RequiresOddPrime,
    #[error("permutation crosses the even/odd block boundary")]
    WallCrossing,
    #[error("unknown identifier: {0}")]
    Unknown(String),
    #[error("context violates constraints: {0}")]
    Constraint(String),
}

pub type Result<T> = std::result::Result<T, Error>;
