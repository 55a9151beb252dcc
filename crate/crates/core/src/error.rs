use std::io;

use thiserror::Error;

/// Which structural condition on the `u | λ̄ v` blocks was violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockViolation {
    /// `k` is larger than `n`.
    KOutOfRange { n: usize, k: usize },
    /// `u` must hold exactly `k` values.
    WrongUSize { expected: usize, found: usize },
    /// `|u| + |λ| + |v|` differs from `n`.
    SizeMismatch { expected: usize, found: usize },
    /// A block is not strictly increasing.
    Unsorted { block: &'static str },
    /// A value lies outside `1..=n`.
    OutOfRange { block: &'static str, value: usize },
    /// A value appears in two blocks (or twice in one).
    Overlap { value: usize },
    /// A value of `1..=n` appears in no block.
    Gap { value: usize },
}

impl std::fmt::Display for BlockViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BlockViolation::KOutOfRange { n, k } => write!(f, "k = {k} exceeds n = {n}"),
            BlockViolation::WrongUSize { expected, found } => {
                write!(f, "u must have {expected} entries, found {found}")
            }
            BlockViolation::SizeMismatch { expected, found } => {
                write!(
                    f,
                    "blocks hold {found} values in total, expected {expected}"
                )
            }
            BlockViolation::Unsorted { block } => {
                write!(f, "block {block} is not strictly increasing")
            }
            BlockViolation::OutOfRange { block, value } => {
                write!(f, "value {value} in block {block} is outside 1..=n")
            }
            BlockViolation::Overlap { value } => write!(f, "value {value} appears more than once"),
            BlockViolation::Gap { value } => write!(f, "value {value} appears in no block"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid k-Grassmannian blocks: {0}")]
    InvalidBlocks(BlockViolation),

    #[error("not a {k}-Grassmannian permutation: {reason} (position {position})")]
    NotGrassmannian {
        k: usize,
        position: usize,
        reason: &'static str,
    },

    #[error("rank {n} exceeds the configured bound {max}")]
    ResourceGuard { n: usize, max: usize },

    #[error("internal invariant failed: {0}")]
    Invariant(String),

    #[error("malformed graph document: {0}")]
    Document(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<BlockViolation> for Error {
    fn from(v: BlockViolation) -> Self {
        Error::InvalidBlocks(v)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
