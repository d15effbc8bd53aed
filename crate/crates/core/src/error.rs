use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("representations are over different algebra presentations")]
    PresentationMismatch,

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("subspace family is not closed under the arrow {arrow}")]
    ClosureViolation { arrow: String },

    #[error("operation requires characteristic zero, got {0}")]
    UnsupportedField(String),

    #[error("denominator not invertible modulo {0}")]
    NotReducibleModP(u64),

    #[error("locality of member {member} is inconclusive")]
    LocalityInconclusive { member: String },

    #[error("member {member} is not local (decomposable)")]
    NotLocal { member: String },

    #[error("isomorphism status of {left} and {right} is unresolved")]
    IsoUnresolved { left: String, right: String },

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether the error reflects an undecided mathematical question rather
    /// than bad input.
    pub fn is_inconclusive(&self) -> bool {
        matches!(
            self,
            Error::LocalityInconclusive { .. } | Error::IsoUnresolved { .. } | Error::Inconclusive(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
