use thiserror::Error;

use crate::scalar::FieldSpec;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate entry for pair ({i}, {j}): basis is not multiplicative or input is not canonical")]
    DuplicatePair { i: usize, j: usize },

    #[error(
        "zero coefficient at pair ({i}, {j}): a zero product must be encoded by omitting the entry"
    )]
    ZeroCoefficient { i: usize, j: usize },

    #[error("scaling factor must be nonzero")]
    ZeroScale,

    #[error("{space} index {index} out of range (size {size})")]
    IndexOutOfRange {
        space: Space,
        index: usize,
        size: usize,
    },

    #[error("expected a vector over {expected}, found one over {found}")]
    SpaceMismatch { expected: Space, found: Space },

    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch {
        expected: FieldSpec,
        found: FieldSpec,
    },

    #[error("invalid scalar {text:?} for field {field}: {reason}")]
    InvalidScalar {
        text: String,
        field: FieldSpec,
        reason: String,
    },

    #[error("{space} labels: expected {expected}, found {found}")]
    LabelCount {
        space: Space,
        expected: usize,
        found: usize,
    },

    #[error("{space} label {label:?} is used more than once")]
    DuplicateLabel { space: Space, label: String },

    #[error("{space} size {size} exceeds the supported maximum")]
    TooLarge { space: Space, size: usize },

    #[error("index {from} is not connected to index {to}")]
    NotConnected { from: usize, to: usize },

    #[error("minimality is undefined for the zero module")]
    EmptyModule,

    #[error("instance of size {size} exceeds the oracle limit of {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },

    #[error("could not reach exactly {target} components within {attempts} attempts")]
    Unsatisfiable { target: usize, attempts: usize },

    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),
}

/// Which of the two bases an index refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    V,
    W,
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Space::V => f.write_str("V"),
            Space::W => f.write_str("W"),
        }
    }
}
