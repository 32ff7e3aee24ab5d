use thiserror::Error;

/// Errors produced by loading, solving, verifying, and reducing instances.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("graph is not a {0}")]
    WrongClass(&'static str),
    #[error("instance has {n} vertices, above the exhaustive-search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("subset must be non-empty")]
    EmptySubset,
    #[error("vertex {0} is out of range")]
    InvalidVertex(usize),
    #[error("malformed clause: {0}")]
    MalformedClause(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
