use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is disconnected: vertex {unreachable} cannot be reached from vertex {from}")]
    Disconnected { from: usize, unreachable: usize },

    #[error("m = {m} has the wrong parity: this construction needs {expected} m")]
    WrongParity { m: usize, expected: &'static str },

    #[error("outside the formula's domain: {0}")]
    Domain(String),

    #[error("instance too large: {vertices} vertices exceeds the limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },

    #[error("labeling does not fit the graph: {0}")]
    Contract(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("cannot access {}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
