use thiserror::Error;

use crate::okubo::Flavor;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("flavor mismatch: {left} vs {right}")]
    FlavorMismatch { left: Flavor, right: Flavor },

    #[error("operation is only defined for the compact Okubo algebra (got {0})")]
    CompactOnly(Flavor),

    #[error("matrix is not {0}")]
    NotHermitian(&'static str),

    #[error("matrix is not skew-hermitian for the {0} flavor")]
    NotSkewHermitian(Flavor),

    #[error("input must be nonzero")]
    ZeroInput,

    #[error("the two points coincide")]
    EqualPoints,

    #[error("not a point of the quadric: b(x, xi1, xi2) = {0}")]
    NotOnQuadric(String),

    #[error("not a Veronese vector: {0}")]
    NotVeronese(String),

    #[error("{0}, not rank-1")]
    NotRank1(String),

    #[error("trace of Veronese representative is {0}, expected a positive value")]
    NonPositiveTrace(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
