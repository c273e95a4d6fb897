use thiserror::Error;

use crate::classifier::ConstraintViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not invertible over the integers")]
    NotUnimodular,

    #[error("expected |det| = 1, got det = {0}")]
    DeterminantNotUnit(String),

    #[error("element has infinite order")]
    InfiniteOrder,

    #[error("subgroup is not two-ended: {0}")]
    NotTwoEnded(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("inconsistent extension data: {0}")]
    InconsistentExtension(String),

    #[error("operation `{op}` does not support quotient kind {kind}")]
    UnsupportedKind { op: &'static str, kind: String },

    #[error("group carries no orientation tagging")]
    Untagged,

    #[error("elements belong to different groups")]
    KindMismatch,

    #[error("invariant constraint violated: {0}")]
    Constraint(ConstraintViolation),

    #[error("monodromy is not hyperbolic: {0}")]
    NotHyperbolic(String),

    #[error("extension has torsion: {0}")]
    TorsionFound(String),

    #[error("lattice decomposition failed: {0}")]
    Decomposition(String),

    #[error("unknown catalog group `{0}`")]
    UnknownCatalog(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

impl From<ConstraintViolation> for Error {
    fn from(v: ConstraintViolation) -> Self {
        Error::Constraint(v)
    }
}
