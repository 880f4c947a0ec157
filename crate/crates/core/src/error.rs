use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A hypergraph or graph violates a structural invariant.
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    /// An argument refers to data that does not exist (bad vertex, non-shadow pair, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A numeric parameter is outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An operation needs an r-uniform hypergraph and did not get one.
    #[error("uniformity error: {0}")]
    NotUniform(String),

    /// The instance is too large for an exhaustive routine.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Malformed serialized hypergraph. `line` is 1-based; for JSON input it
    /// numbers the offending edge instead.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
