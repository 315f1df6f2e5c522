use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("rank must be at least 1")]
    InvalidRank,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u32, max: u32 },
    #[error("variant mismatch: {0} vs {1}")]
    VariantMismatch(String, String),
    #[error("no image for letter {0}")]
    MissingImage(String),
    #[error("{0} illegal: ρ fixes node {1}")]
    IllegalLetter(String, u32),
    #[error("element is not an invertible monomial: {0}")]
    NotInvertible(String),
    #[error("malformed expression: {0}")]
    Malformed(String),
}
