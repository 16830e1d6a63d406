use thiserror::Error;

/// Errors raised by the algebraic routines.
///
/// Every variant carries a human-readable witness so that front ends can
/// report the failing input instead of panicking.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("degree cap {cap} exceeded by a term of degree {degree}")]
    DegreeCap { cap: u32, degree: u32 },
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("inhomogeneous: {0}")]
    Inhomogeneous(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("shape violation: {0}")]
    Shape(String),
    #[error("closure failure: {0}")]
    Closure(String),
    #[error("degenerate quadruple: {0}")]
    Degenerate(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
