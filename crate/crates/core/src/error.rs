//! Crate-wide error type.

use crate::corpus::NormalizationPolicy;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid key `{0}`: keypad keys are the digits 0-9")]
    InvalidKey(String),

    #[error("invalid keypad: {0}")]
    InvalidKeypad(String),

    #[error("cannot merge tables built under different policies: {left:?} vs {right:?}")]
    PolicyMismatch {
        left: NormalizationPolicy,
        right: NormalizationPolicy,
    },

    #[error("cannot merge an empty list of tables")]
    EmptyMerge,

    #[error("character `{0}` is outside the model alphabet (letters a-z and space)")]
    UnsupportedCharacter(char),

    #[error("letter `{0}` is not assigned to any key of this layout")]
    UnassignedLetter(char),

    #[error("letter ranking contains `{0}` more than once")]
    DuplicateRankingLetter(char),

    #[error("letter ranking entry `{0}` is not a lowercase ascii letter")]
    InvalidRankingLetter(char),

    #[error("letter ranking is empty")]
    EmptyRanking,

    #[error("{letters} ranked letters exceed the capacity of {keys} letter keys (4 per key)")]
    RankingOverflow { letters: usize, keys: usize },

    #[error("key ranking must contain each of the 10 keys exactly once")]
    InvalidKeyRanking,

    #[error("space key and symbol key must be two distinct keys")]
    ReservedKeysCollide,

    #[error("invalid cost parameters: {0}")]
    InvalidParams(String),

    #[error("frequency table has no letter data")]
    EmptyTable,

    #[error("corpus contains no letters")]
    EmptyCorpus,

    #[error("at least two layouts are required for a comparison")]
    NotEnoughLayouts,

    #[error("unknown output format `{0}`")]
    UnknownFormat(String),

    #[error("malformed document: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
