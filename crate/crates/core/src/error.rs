use std::io;

use thiserror::Error;

/// Errors raised by every operation in the crate.
///
/// The variants line up with the CLI exit codes: parameter and parse problems
/// exit with 2, resource exhaustion with 3, and contract violations (an input
/// that fails a verification the operation depends on) with 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Param(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Param(_) | Error::Parse { .. } | Error::Io(_) => 2,
            Error::Resource(_) => 3,
            Error::Contract(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
