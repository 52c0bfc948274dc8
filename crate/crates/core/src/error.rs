use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The word is not a rearrangement of `1..=n`.
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("repeated entry in word: {0}")]
    RepeatedEntry(String),

    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),

    #[error("invalid pattern set: {0}")]
    InvalidPatternSet(String),

    /// A size parameter is outside the configured enumeration guard.
    #[error("{what}: n = {n} is outside the allowed range {min}..={max}")]
    Guard { what: &'static str, n: usize, min: usize, max: usize },

    /// The input lies outside the class a map is defined on.
    #[error("{map}: {input} is not in {class}")]
    OutOfDomain { map: &'static str, input: String, class: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two computations of the same quantity disagree.
    #[error("identity failed: {0}")]
    IdentityFailed(String),
}

pub(crate) fn guard(what: &'static str, n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        Err(Error::Guard { what, n, min, max })
    } else {
        Ok(())
    }
}
