use thiserror::Error;

use crate::conic::BalanceViolation;
use crate::quadratic::Monomial;
use crate::reconstruct::TreeRejection;
use crate::semiring::ScalarParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("coefficient of {0} must be finite for a degree-two polynomial")]
    NonFiniteDiagonal(Monomial),
    #[error("expected a shape matrix (zero diagonal)")]
    NotShapeMatrix,
    #[error("expected a non-negative shape matrix")]
    NotNonnegShape,
    #[error("point lies outside the {0} chart")]
    OutsideChart(crate::conic::Chart),
    #[error("point is on the boundary; affine coordinates are not finite")]
    BoundaryPoint,
    #[error("every coordinate of a projective point is -inf")]
    AllBottom,
    #[error("linear form has no finite coefficient")]
    EmptyLinearForm,
    #[error(transparent)]
    Scalar(#[from] ScalarParseError),
    #[error("parse error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("rejected tree: {0}")]
    Tree(#[from] TreeRejection),
    #[error("{0}")]
    Balance(Box<BalanceViolation>),
    #[error("invalid document: {0}")]
    Document(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<BalanceViolation> for Error {
    fn from(v: BalanceViolation) -> Self {
        Error::Balance(Box::new(v))
    }
}

impl Error {
    /// Internal errors indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
