use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{what} exceeds the cap of {cap} (raise `{key}` to allow it)")]
    CapExceeded {
        what: String,
        cap: usize,
        key: &'static str,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("subspace is not an element of the building set")]
    NotInBuildingSet,

    #[error("subspace is not in the sum-closure of the arrangement")]
    NotInClosure,

    #[error("minimal containing element is not unique: {0}")]
    NonUniqueMinimum(String),

    #[error("words live over different groups ({0} vs {1})")]
    GroupMismatch(String, String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
