use thiserror::Error;

/// Errors across the workbench.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in Q(zeta_120)")]
    DivisionByZero,

    #[error("root-of-unity order {0} does not divide 120")]
    InvalidRootOrder(u32),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("contraction order {k} exceeds a form degree ({d1}, {d2})")]
    ContractionOutOfRange { k: u32, d1: usize, d2: usize },

    #[error("operation needs degree >= {needed}, got {got}")]
    DegreeTooSmall { needed: usize, got: usize },

    #[error("group closure exceeded the bound of {bound} elements")]
    ClosureExceeded { bound: usize },

    #[error("unsupported group parameter: {0}")]
    UnsupportedParameter(String),

    #[error("operation not defined for group {0}")]
    UnsupportedGroup(String),

    #[error("the zero form has no character")]
    ZeroForm,

    /// An internal consistency check failed; if this ever fires the
    /// implementation (not the input) is wrong.
    #[error("certification failure: {0}")]
    Certification(String),
}
