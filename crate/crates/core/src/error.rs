use thiserror::Error;

/// Errors produced by the evaluation engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ZeroDenominator: rational with zero denominator")]
    ZeroDenominator,

    #[error("DivisionByZero: attempted to invert zero")]
    DivisionByZero,

    #[error("invalid rational literal {0:?}")]
    InvalidLiteral(String),

    #[error("OrderTooSmall: recurrence order must be at least 2, got {0}")]
    OrderTooSmall(usize),

    #[error("LengthMismatch: {coefficients} coefficients but {initials} initial terms")]
    LengthMismatch { coefficients: usize, initials: usize },

    #[error("NegativeIndexUnavailable: index {index} requires a nonzero last coefficient")]
    NegativeIndexUnavailable { index: i64 },

    #[error("EmptyRange: lower bound {lo} exceeds upper bound {hi}")]
    EmptyRange { lo: i64, hi: i64 },

    #[error("UnknownSequence: no catalog entry named {0:?}")]
    UnknownSequence(String),

    #[error("UnknownTable: no reference table named {0:?}")]
    UnknownTable(String),

    #[error("malformed data: {0}")]
    Data(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
