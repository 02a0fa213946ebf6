use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operation requires a nonempty set")]
    EmptySet,

    #[error("operation requires at least {needed} elements, got {got}")]
    TooFewElements { needed: usize, got: usize },

    #[error("set is not normalized (expected min 0 and gap gcd 1): {0}")]
    NotNormalized(String),

    #[error("{0} is already a member of the set")]
    AlreadyMember(i64),

    #[error("n must be at least 1")]
    NonPositiveSize,

    #[error("malformed set literal at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("parameters not admissible: {0}")]
    Inadmissible(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("checkpoint {path}: {message}")]
    Checkpoint { path: PathBuf, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
