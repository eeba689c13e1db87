use thiserror::Error;

/// Errors produced by the algebra and coding routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("component {component}: {poly} is not a right divisor of {modulus}")]
    NotRightDivisor {
        component: usize,
        poly: String,
        modulus: String,
    },

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("enumeration of {needed} words exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("invalid code specification: {0}")]
    InvalidSpec(String),

    #[error("oracle violation: {0}")]
    Oracle(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}
