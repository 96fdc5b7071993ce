use thiserror::Error;

/// Errors reported by the library and the CLI.
///
/// `Domain` and `Contract` map to CLI exit code 1, `Parse` and `Io` to exit
/// code 2.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the operation's domain (bad extents, missing
    /// background, out-of-extent center, oracle size guard, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A caller-side contract was violated (e.g. a ball set handed to
    /// `measure` that does not reconstruct the image).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Malformed file content; `offset` is the byte position of the
    /// first offending byte.
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Contract(_) => 1,
            Error::Parse { .. } | Error::Io(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}

pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Error {
    Error::Parse { offset, msg: msg.into() }
}
