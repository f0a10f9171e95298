use thiserror::Error;

/// Errors produced by parsing, validation and the domain-restricted maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate value {value} in sequence")]
    DuplicateValue { value: u32 },

    #[error("not a permutation of 1..{len}: {reason}")]
    NotAPermutation { len: usize, reason: String },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("illegal step {found:?} at position {position}")]
    IllegalStep { position: usize, found: char },

    #[error("path goes below its baseline at step {position}")]
    NegativePrefix { position: usize },

    #[error("path is unbalanced: it ends at height {height}")]
    Unbalanced { height: usize },

    #[error("{map}: input outside the domain ({reason})")]
    Domain { map: &'static str, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow computing {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(map: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            map,
            reason: reason.into(),
        }
    }

    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
