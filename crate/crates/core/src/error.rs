use thiserror::Error;

/// Errors raised by the exact arithmetic, the continued-fraction engine and
/// the predicates built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different quadratic fields: sqrt({0}) vs sqrt({1})")]
    FieldMismatch(String, String),
    #[error("{0} is a square in Z[i]")]
    SquareRadicand(String),
    #[error("not quadratic: {0}")]
    NotQuadratic(String),
    #[error("no nontrivial conjugate for a Gaussian rational")]
    NoConjugate,
    #[error("contract violation: value is not real ({0})")]
    NotReal(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{0} is not in (1+i)Z[i]\\{{0}}")]
    NotEven(String),
    #[error("tiling assertion failed: {0}")]
    Tiling(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("verification failure: {0}")]
    Verification(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
