use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("unsupported root system type {0}")]
    InvalidType(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("point {point} lies outside the stored radius {radius}")]
    OutsideRadius { point: String, radius: usize },
    #[error("insufficient radius: need {needed}, have {available}")]
    InsufficientRadius { needed: usize, available: usize },
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
