use thiserror::Error;

/// Error type shared by every module in the crate.
///
/// The variants map onto the three ways an operation can be refused:
/// `Parse` for malformed input files, `Contract` for violated
/// preconditions, and `Guard` for inputs that are well-formed but too
/// large for an exact enumeration to finish at desk scale. `Guard` is
/// deliberately distinct so callers (the CLI in particular) can exit
/// with a different status code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("guard refused: {0}")]
    Guard(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("oracle inconsistent: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn guard(msg: impl Into<String>) -> Self {
        Error::Guard(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
