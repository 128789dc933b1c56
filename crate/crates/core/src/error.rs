use thiserror::Error;

use crate::arith::Rational;
use crate::classify::StepTrace;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot combine elements of Q(sqrt({})) and Q(sqrt({}))", .0[0], .0[1])]
    ExtensionMismatch(Box<[Rational; 2]>),
    #[error("extension unsupported: {0}")]
    ExtensionUnsupported(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("polynomial does not vanish at the point")]
    NotVanishing,
    #[error("curve is not reduced: repeated factor {0}")]
    NonReduced(String),
    #[error("classification did not terminate within {cap} steps")]
    StepCapExceeded { cap: usize, trace: Box<StepTrace> },
    #[error("ideal is positive-dimensional")]
    PositiveDimensional,
    #[error("projection center meets the scheme")]
    CenterMeetsScheme,
    #[error("center meets the curve: forms share a common zero on P^1")]
    CenterMeetsCurve,
    #[error("parameterization has base points")]
    BasePoints,
    #[error("parameterization not birational onto a curve of that presentation")]
    DegenerateResultant,
    #[error("curve has a point of multiplicity >= 3")]
    HigherMultiplicity,
    #[error("no suitable random choice found after {0} attempts")]
    RetriesExhausted(usize),
}
