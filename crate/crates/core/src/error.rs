use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division is not exact: nonzero remainder")]
    NonExactDivision,
    #[error("evaluation at zero of a polynomial with negative exponents")]
    ZeroPoint,
    #[error("modulus must be a positive odd integer, got {0}")]
    BadModulus(String),
    #[error("arguments are not coprime: gcd({0}, {1}) > 1")]
    NotCoprime(String, String),
    #[error("hypothesis requires a non-coprime pair, but gcd({0}, {1}) = 1")]
    CoprimeInput(String, String),
    #[error("invalid matrix spec: {0}")]
    BadSpec(String),
    #[error("matrix of order {0} exceeds the cofactor expansion bound {1}")]
    TooLarge(usize, usize),
    #[error("determinant has x-degree {0}, expected at most 1")]
    DegreeViolation(usize),
    #[error("q0 must be a positive real number different from 1, got {0}")]
    BadQ(f64),
    #[error("rank sampling needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
