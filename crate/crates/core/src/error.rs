use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("order violation: {0}")]
    Order(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("exponent overflow")]
    Overflow,
    #[error("{0} has no lex predecessor in its degree")]
    NoPredecessor(String),
    #[error("degree-zero monomial has empty support")]
    EmptySupport,
    #[error("empty generator set")]
    Empty,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("binomial is not in the presentation ideal: {0}")]
    NotInKernel(String),
    #[error("reduction budget of {0} steps exhausted")]
    Budget(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
