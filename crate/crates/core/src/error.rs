use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    Guard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("ring mismatch: {0} vs {1} variables")]
    RingMismatch(usize, usize),

    #[error("void complex has no Stanley-Reisner ideal or boundary maps")]
    VoidComplex,

    #[error("unit ideal")]
    UnitIdeal,

    #[error("field characteristic {0} is neither 0 nor prime")]
    BadField(u64),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    pub(crate) fn guard(what: &'static str, actual: usize, limit: usize) -> Self {
        Error::Guard { what, actual, limit }
    }
}
