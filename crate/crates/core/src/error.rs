use thiserror::Error;

use crate::scalar::FieldDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    #[error("invalid field descriptor: {0}")]
    InvalidField(String),
    #[error("degree {0} is too small, W(f) needs deg f >= 4")]
    DegreeTooSmall(usize),
    #[error("index {index} out of range for {len} nodes")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("affine transport needs a nonzero scale")]
    ZeroScale,
    #[error("point is a pole of the rational function")]
    PoleAtPoint,
    #[error("points must be pairwise distinct")]
    CoincidentPoints,
    #[error("polynomial is not divisible by {0}")]
    NotDivisible(String),
    #[error("polynomial does not lie in Z(eta, omega; s, k)")]
    NotInZ,
    #[error("f has no simple roots, use the n1 = 0 closed form")]
    NoSimpleRoots,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("routes disagree: {0}")]
    RouteDisagreement(String),
    #[error("internal identity check failed: {0}")]
    IdentityFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
