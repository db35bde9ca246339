use thiserror::Error;

use crate::cli::form::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid pencil: {0}")]
    InvalidPencil(String),

    /// `det(U - λV)` vanishes identically.
    #[error("degenerate pencil: det(U - \u{3bb}V) is identically zero")]
    DegeneratePencil,

    /// Every member of the pencil is a singular quadric.
    #[error("the pencil has no smooth member")]
    NoSmoothMember,

    /// The floating-point oracle refused to decide.
    #[error("ill-conditioned input: {0}")]
    IllConditioned(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    /// Two independent routes to the same quantity disagreed.
    #[error("internal consistency violation: {0}")]
    Consistency(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
