use thiserror::Error;

use crate::graph::Graph;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An exact algorithm was asked to run beyond its hard size cap.
    #[error("capacity exceeded: {what} supports at most {limit}, got {got}")]
    Capacity {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("invalid move: {0}")]
    InvalidMove(String),

    /// A brute-force table cell disagreed with the closed form.
    #[error("verification failed at (n={n}, k={k}, s={s}): oracle {oracle}, formula {formula}")]
    VerificationFailure {
        n: usize,
        k: usize,
        s: usize,
        oracle: u64,
        formula: u64,
        witness: Box<Graph>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub(crate) fn check_capacity(what: &'static str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        Err(Error::Capacity { what, limit, got })
    } else {
        Ok(())
    }
}
