use thiserror::Error;

/// Errors produced by the library.
///
/// `Parse` covers malformed textual input (usage-level problems); the other
/// variants are domain or resource failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    Domain(String),

    #[error("{what} = {value} exceeds the configured cap {cap} ({hint})")]
    Resource {
        what: &'static str,
        value: u64,
        cap: u64,
        hint: &'static str,
    },
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
