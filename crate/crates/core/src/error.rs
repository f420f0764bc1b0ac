use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A value violates a type invariant; the message names the invariant.
    #[error("{0}")]
    Invalid(String),

    /// Validation failure inside a list of pairs.
    #[error("pair {index}: {source}")]
    Pair {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("not a unibranch plane-branch semigroup: {0}")]
    NotPlaneBranch(String),

    /// Input describes a smooth germ where a singular one is required.
    #[error("smooth germ: {0}")]
    Smooth(String),

    /// An operation was called outside its precondition.
    #[error("contract violation: {0}")]
    Contract(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn at_pair(self, index: usize) -> Self {
        Error::Pair {
            index,
            source: Box::new(self),
        }
    }
}
