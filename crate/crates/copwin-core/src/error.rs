use thiserror::Error;

/// Errors for graph ingestion, state-space construction and solving.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The state space (k+1)*n^(k+1) does not fit under the configured cap.
    #[error("state space (k+1)*n^(k+1) = {states} exceeds the cap of {cap} states")]
    ResourceLimit { states: u128, cap: u128 },

    #[error("malformed dump: {0}")]
    Dump(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
