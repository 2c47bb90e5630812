use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A generated group exceeded the configured maximum order.
    #[error("generated group has order larger than the limit {max}")]
    SizeLimit { max: usize },

    /// A search exceeded its exploration budget.
    #[error("capacity exceeded for {what}: {detail}")]
    Capacity { what: String, detail: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no catalog group ({order}, {id}); available ids for order {order}: {available:?}")]
    NotFound {
        order: usize,
        id: usize,
        available: Vec<usize>,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported results format version {found}")]
    Version { found: String },

    #[error("set count mismatch: footer says {expected}, file has {found}")]
    Checksum { expected: usize, found: usize },

    #[error("verification failed on line {line}: {message}")]
    Verification { line: usize, message: String },

    #[error("search interrupted")]
    Interrupted,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
