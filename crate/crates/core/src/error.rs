use thiserror::Error;

/// Errors raised by the library.
///
/// The variants fall into three families which the command-line front end
/// maps onto distinct exit codes: malformed input, violated preconditions,
/// and internal invariant failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected [{expected}], found [{found}]")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("map value {value} at position {position} is outside [{target}]")]
    MapValueOutOfRange {
        position: usize,
        value: usize,
        target: usize,
    },

    #[error("degree {degree} exceeds the truncation bound {truncation}")]
    TruncationExceeded { degree: usize, truncation: usize },

    #[error("degree {degree} exceeds the configured cap {cap}")]
    CapExceeded { degree: usize, cap: usize },

    #[error("invalid edge structure: {0}")]
    InvalidEdgeStructure(String),

    #[error("malformed simplex: {0}")]
    MalformedSimplex(String),

    #[error("simplex {0} is not a member of the symmetric set")]
    NotMember(String),

    #[error("edges are not composable: codomain {cod} differs from domain {dom}")]
    NotComposable { cod: String, dom: String },

    #[error("symmetric set is not spiny: {0}")]
    NotSpiny(String),

    #[error("symmetric set is empty")]
    Empty,

    #[error("symmetric set is not reduced: it has {objects} objects")]
    NotReduced { objects: usize },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid groupoid presentation: {0}")]
    InvalidGroupoid(String),

    #[error("invalid transporter data: {0}")]
    InvalidTransporter(String),

    #[error("subgroup collection rejected in strict mode: {0}")]
    NotConjugationClosed(String),

    #[error("{0}")]
    InvalidInput(String),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by a caller violating an operation's
    /// precondition rather than by malformed data.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::DegreeMismatch { .. }
                | Error::TruncationExceeded { .. }
                | Error::CapExceeded { .. }
                | Error::NotComposable { .. }
                | Error::NotSpiny(_)
                | Error::Empty
                | Error::NotReduced { .. }
                | Error::NotMember(_)
                | Error::NotConjugationClosed(_)
        )
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
