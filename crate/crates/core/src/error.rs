use thiserror::Error;

/// Errors raised by the computational modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of order {0} exceeds the supported bound 2^16")]
    FieldTooLarge(u64),
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    ReducibleModulus(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: i64, got: i64 },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is not monic in variable {0}")]
    NotMonicInVariable(usize),
    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("unsupported dimension or size: {0}")]
    UnsupportedDimension(String),
    #[error("degenerate map: the forms share a root")]
    DegenerateMap,
    #[error("input rejected as non-normal: {0}")]
    NonNormal(String),
    #[error("cochain pieces did not stabilise at denominator bound {0}")]
    StabilizationFailure(u32),
    #[error("cochain identity failed: {0}")]
    IdentityFailure(String),
    #[error("window [{lo}, {hi}] cannot hold degree {needed}")]
    WindowInsufficient { lo: i64, hi: i64, needed: i64 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
