use thiserror::Error;

/// Errors raised by the combinatorial and algebraic routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("invalid partition {parts:?} for k={k}: {reason}")]
    Partition {
        parts: Vec<u32>,
        k: u32,
        reason: String,
    },
    #[error("partition {0} lies outside the ring's rectangle")]
    OutsideRectangle(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("expansion failed: {0}")]
    Expansion(String),
    #[error("not in span: {0}")]
    NotInSpan(String),
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("singular system: {0}")]
    Singular(String),
}

pub type Result<T> = std::result::Result<T, Error>;
