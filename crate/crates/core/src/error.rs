use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("invalid {0}: {1}")]
    InvalidParameter(String, String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("parse error on line {line}: {message}")]
    ParseLine { line: usize, message: String },
    #[error("word is not a member of the subgroup")]
    NotAMember,
    #[error("strand index {index} out of range for {strands} strands")]
    StrandOutOfRange { index: usize, strands: usize },
    #[error("strand counts differ ({0} vs {1})")]
    StrandMismatch(usize, usize),
    #[error("braid is not pure")]
    NotPure,
    #[error("braid is not Brunnian")]
    NotBrunnian,
    #[error("unknown catalog presentation {0:?}")]
    UnknownPresentation(String),
    #[error("coset enumeration did not close within {0} cosets")]
    NotClosed(usize),
    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(what: impl Into<String>, why: impl Into<String>) -> Self {
        Error::InvalidParameter(what.into(), why.into())
    }
}
