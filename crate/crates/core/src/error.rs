use thiserror::Error;

/// Errors raised by the algebra, eliminant, spectral and Laurent routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid deformation parameter: q must not be 0 or -1")]
    InvalidQ,
    #[error("operands live over different deformation parameters")]
    ModeMismatch,
    #[error("elements do not commute")]
    NonCommuting,
    #[error("element has order 0 (every operand must have order at least 1)")]
    ZeroOrder,
    #[error("polynomial must be non-constant")]
    ConstantPolynomial,
    #[error("operation is undefined for the zero element")]
    ZeroElement,
    #[error("operation is undefined for a constant element")]
    ConstantElement,
    #[error("operation requires a numeric value of q")]
    SymbolicModeUnsupported,
    #[error("window too narrow: trusted interval is empty or below the minimum width")]
    DegenerateWindow,
    #[error("root listed more than once")]
    DuplicateRoot,
    #[error("zero cannot be used as a root here")]
    ZeroRoot,
}
