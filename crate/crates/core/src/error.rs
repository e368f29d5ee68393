use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{what} is {got}, limit is {limit}")]
    SizeExceeded {
        what: &'static str,
        got: u64,
        limit: u64,
    },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("invalid augmenting path: {0}")]
    InvalidPath(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid deck: {0}")]
    InvalidDeck(String),

    #[error("deck already halted (top card is 1)")]
    AlreadyHalted,

    #[error("quadrature did not converge: {0}")]
    NoConvergence(String),

    #[error("tolerance {tolerance:e} unreachable: truncation point {needed:e} exceeds cap {cap:e}")]
    ToleranceUnreachable { tolerance: f64, needed: f64, cap: f64 },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn size_check(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(Error::SizeExceeded {
            what,
            got: got as u64,
            limit: limit as u64,
        })
    } else {
        Ok(())
    }
}
