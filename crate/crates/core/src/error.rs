//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate arrow id {0}")]
    DuplicateArrowId(u32),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("dual-pair vertex `{0}` has no partner")]
    UnpairedDualVertex(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("Cayley transform hit a singular matrix after {0} attempts")]
    SingularCayley(usize),

    #[error("no bilinear form available at vertex `{0}`")]
    MissingForm(String),

    #[error("genus {0} is too small for this construction (needs genus >= 2)")]
    GenusTooSmall(i64),

    #[error("insufficient samples: need at least {needed}, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("unsupported rank {rank} for group {group}")]
    UnsupportedRank { group: String, rank: u32 },

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid dimension vector: {0}")]
    InvalidDimensionVector(String),

    #[error("numeric overflow in {0}")]
    NumericOverflow(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
