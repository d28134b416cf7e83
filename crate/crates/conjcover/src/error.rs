//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building groups or searching coverings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cycle parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("group too large for desk-scale engine: closure exceeded cap {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("subgroup lattice too large: {what} exceeded cap {cap}; use action-provided subgroups instead")]
    LatticeCapExceeded { what: &'static str, cap: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("subset belongs to a different group table")]
    ParentMismatch,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup is normal; products of its conjugates never leave it")]
    NormalSubgroup,

    #[error("subgroup is not proper")]
    NotProper,

    #[error("product chain stabilized below the full group; base subgroup is not maximal")]
    NotMaximal,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("covering witness needs at least two factors")]
    WitnessTooShort,

    #[error("search state cap {cap} exceeded after exploring {explored} states")]
    SearchAborted { cap: usize, explored: usize },

    #[error("no covering of length at most {limit} found")]
    SearchExhausted { limit: u32 },

    #[error("solvable frame invariant violated: {0}")]
    BrokenFrame(String),
}

pub type Result<T> = std::result::Result<T, Error>;
