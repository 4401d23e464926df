use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: i64, found: i64 },
    #[error("coordinate x{index} is not allowed in denominators on this chart")]
    ChartViolation { index: usize },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("series is not divisible by t")]
    NotDivisible,
    #[error("Euler relation violated")]
    EulerRelation,
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("singular matrix")]
    Singular,
    #[error("not a cocycle, failing tuple {witness:?}")]
    NotACocycle { witness: Vec<usize> },
    #[error("derivation is not in Der0")]
    NotInDer0,
    #[error("automorphism is not in G0 (mu is not 1 mod t)")]
    NotInG0,
    #[error("derivation family is not a global section, failing pair {0:?}")]
    NotGlobal((usize, usize)),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("arithmetic inconsistency: {0}")]
    ArithmeticInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
