use thiserror::Error;

/// Errors raised by graph construction, parsing and the enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gain group mismatch: order {left} vs order {right}")]
    GroupMismatch { left: u32, right: u32 },

    #[error("gain group order must be at least 1")]
    EmptyGroup,

    #[error("exponent {exp} out of range for group of order {order}")]
    ExponentOutOfRange { exp: i64, order: u32 },

    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(usize, usize),

    #[error("mixed mode requires a group of order 4, got {0}")]
    MixedModeOrder(u32),

    #[error("gain {gain} on edge ({u}, {v}) is not allowed in a mixed graph")]
    NotMixedGain { u: usize, v: usize, gain: String },

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("operation requires a mixed graph")]
    NotMixed,

    #[error("negation needs a group of even order, got {0}")]
    OddOrderNegation(u32),

    #[error("permutation is not an automorphism of the underlying graph")]
    NotAutomorphism,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("instance too large: {what} is {size}, cap is {cap}")]
    TooLarge { what: &'static str, size: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid face structure: {0}")]
    Faces(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
