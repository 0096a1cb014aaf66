use thiserror::Error;

use crate::weights::Wall;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no Betti table entry for ~Sym^{n} C")]
    MissingBettiTable { n: u32 },

    #[error("weight lies on wall {wall}")]
    NotGeneric { wall: Wall },

    #[error("degenerate path: {reason}")]
    DegeneratePath { reason: String },

    #[error("expression is not effective: {0}")]
    NotEffective(String),

    #[error("polynomial division is not exact")]
    NonExactDivision,

    #[error("expression still contains moduli atoms; expand it first")]
    UnexpandedModuli,

    #[error("rank-2 moduli atoms need odd degree, got d = {0}")]
    EvenDegree(i64),

    #[error("expected even degree, got d = {0}")]
    OddDegree(i64),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("index {index} out of range 1..={max}")]
    InvalidIndex { index: usize, max: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),

    #[error("invalid wall: {0}")]
    InvalidWall(String),

    #[error("operation only defined for odd parity walls")]
    OddParityOnly,

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("genus {g} too small: need g >= {min}")]
    GenusTooSmall { g: u32, min: u32 },
}
