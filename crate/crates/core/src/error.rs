use thiserror::Error;

use crate::polycore::Var;

/// Errors produced by the analysis library.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("variable mismatch: {0} vs {1}")]
    VarMismatch(Var, Var),
    #[error("operation not defined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must have degree >= 1")]
    DegreeTooSmall,
    #[error("singular pencil: det(I - sum B_k) = 0")]
    SingularPencil,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("degenerate system: real and imaginary parts vanish identically")]
    DegenerateSystem,
    #[error("degenerate view: polynomial identically zero in the chosen variable")]
    DegenerateView,
    #[error("invalid decimal literal: {0}")]
    BadDecimal(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
