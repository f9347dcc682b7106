use alloc::string::String;

use crate::report::Report;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Tensor or matrix dimensions disagree with the declared structure.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// An operation was called on data outside its domain.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An input structure failed its own axiom checks.
    #[error("{what} failed validation ({} failing check(s))", .report.failures().count())]
    Invalid { what: String, report: Report },
}

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
