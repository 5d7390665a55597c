use std::path::PathBuf;

use thiserror::Error;

use crate::code::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("no such design: {0}")]
    NoSuchDesign(String),

    #[error("invalid code: {0}")]
    InvalidCode(Violation),

    #[error("search timed out after {nodes} nodes without settling the question")]
    Timeout { nodes: u64 },

    #[error("unknown catalog entry: {0}")]
    UnknownCatalogEntry(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed code file: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
