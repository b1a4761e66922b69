use thiserror::Error;

/// Errors raised by the arithmetic kernels, the combinatorial constructors
/// and the check harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series division by a series whose constant term is zero")]
    DivisionByNonUnit,

    #[error("{op} requires a constant term of {expected}")]
    BadConstantTerm { op: &'static str, expected: &'static str },

    #[error("rational function with zero denominator")]
    ZeroDenominator,

    #[error("polynomial is not univariate")]
    NotUnivariate,

    #[error("series operands disagree: {0}")]
    SeriesMismatch(String),

    #[error("expected a polynomial, found a proper rational function: {0}")]
    NonPolynomialResult(String),

    #[error("size bound {bound} exceeds the enumeration budget {budget}")]
    BoundOverflow { bound: u64, budget: u64 },

    #[error("input exceeds the desk-scale budget: {0}")]
    BudgetExceeded(String),

    #[error("variable {0} is outside the allowed variable block")]
    VariableOutOfScope(String),

    #[error("matrix is not square")]
    NotSquare,

    #[error("weight undefined at cell ({row},{col}) of {partition}")]
    WeightUndefined { partition: String, row: usize, col: usize },

    #[error("unknown check id {0:?}")]
    UnknownCheck(String),

    #[error("check {check} has no bound named {bound:?}")]
    UnknownBound { check: String, bound: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
