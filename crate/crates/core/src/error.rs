use thiserror::Error;

/// Errors raised by the algebra, code and DNA layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no multiplicative inverse in F4")]
    ZeroInverse,
    #[error("{0} is not a unit of R")]
    NotUnit(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("divisor leading coefficient {0} is not a unit")]
    NonUnitLeading(String),
    #[error("degree {degree} does not fit in length {n}")]
    DegreeTooLarge { degree: usize, n: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("odd length {0} where an even length is required")]
    OddLength(usize),
    #[error("code length {n} outside the supported range 1..={max}")]
    UnsupportedLength { n: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("code has 2^{dimension} words, exceeding the cap of {cap}")]
    CapExceeded { dimension: u32, cap: u64 },
    #[error("search needs {needed} candidates, exceeding the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("minimum distance is undefined for the zero code")]
    TrivialCode,
    #[error("code needs at least one nonzero generator")]
    NoGenerators,
}

pub type Result<T> = std::result::Result<T, Error>;
