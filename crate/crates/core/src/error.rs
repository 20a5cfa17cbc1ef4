use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter lies outside the domain where the computation is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// A value left the representable floating range.
    #[error("overflow: {0}")]
    Overflow(String),
    /// An iterative solver exhausted its budget.
    #[error("convergence failure: {0}")]
    Convergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
