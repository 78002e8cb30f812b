use thiserror::Error;

use crate::report::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A hyperedge or root list that cannot be interpreted at all.
    #[error("malformed hyperedge #{index} {vertices:?}: {reason}")]
    MalformedEdge {
        index: usize,
        vertices: Vec<u32>,
        reason: String,
    },

    #[error("invalid forest: {0}")]
    InvalidForest(ValidationReport),

    #[error("invalid code: {0}")]
    InvalidCode(ValidationReport),

    /// Parameters outside the domain of an operation.
    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("enumeration needs {required} candidates, budget is {budget}")]
    BudgetExceeded { required: String, budget: u64 },

    /// Something the bijection guarantees cannot happen did happen.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Stable, machine-readable reason code.
    pub fn reason_code(&self) -> &'static str {
        match self {
            Error::MalformedEdge { .. } => "malformed_edge",
            Error::InvalidForest(_) => "invalid_forest",
            Error::InvalidCode(_) => "invalid_code",
            Error::Range(_) => "out_of_range",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::Invariant(_) => "invariant_violated",
        }
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }
}
