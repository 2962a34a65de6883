use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("arity mismatch: expected {expected} variables, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("exact division failed: the divisor does not divide the dividend")]
    NotDivisible,
    #[error("substitution makes a denominator vanish")]
    SubstitutionSingular,
    #[error("invalid sector: N = {n}, r = {r}")]
    InvalidSector { n: i64, r: i64 },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("not a partition word: {0}")]
    NotAPartition(String),
    #[error("not antidominant: {0}")]
    NotAntidominant(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("the chain is reducible: stationary distribution is not unique")]
    Reducible,
    #[error("parameter {0} must be positive")]
    NonpositiveParam(String),
    #[error("transition probabilities out of state {0} exceed 1")]
    NotStochastic(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty word")]
    EmptyWord,
}

pub type Result<T> = std::result::Result<T, Error>;
