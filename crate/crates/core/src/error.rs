use alloc::vec::Vec;

use crate::equivariant::ValidationIssue;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is only defined for positive arguments")]
    NonPositiveArgument(&'static str),
    #[error("weight mismatch: {left} != {right}")]
    WeightMismatch { left: u32, right: u32 },
    #[error("coefficient of t^{degree} is not homogeneous of weight {degree}")]
    Grading { degree: usize },
    #[error("exponent {numerator}/{denominator} of (1 + p_{k} t^{k}) is not an integer")]
    NonIntegerExponent { k: u32, numerator: i64, denominator: i64 },
    #[error("genus {0} is outside the supported range g >= 2")]
    GenusOutOfRange(i64),
    #[error("inconsistent group action data ({} issue(s))", .0.len())]
    InvalidGroup(Vec<ValidationIssue>),
}
