use thiserror::Error;

use crate::geometry::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),

    #[error("point set is not in general position for {family}: {violation}")]
    GeneralPosition { family: String, violation: Violation },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("search budget exceeded: {needed} candidates needed, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },

    #[error("search exhausted after {0} candidates without a witness")]
    SearchExhausted(u64),

    #[error("coloring domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
