use thiserror::Error;

/// Errors surfaced by the algebra kernel and the representation layer.
///
/// Failed *verification checks* are never errors; they are recorded as
/// entries in a [`crate::report::VerificationReport`]. Errors are reserved
/// for structurally invalid inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("bigraded order mismatch: {left:?} vs {right:?}")]
    BiOrderMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("not a unit: constant term is not invertible")]
    NotAUnit,

    #[error("argument must be nilpotent (zero constant term)")]
    NotNilpotent,

    #[error("component index {index} out of range for order {order}")]
    ComponentOutOfRange { index: usize, order: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot parse rational number from {0:?}")]
    ParseRational(String),

    #[error("cannot parse spin from {0:?} (expected a nonnegative half-integer like \"1/2\", \"1\", \"3/2\")")]
    ParseSpin(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
