use thiserror::Error;

/// Errors raised by tree construction, products and coproducts.
///
/// The unit conventions make a handful of expressions genuinely undefined
/// (for example `| ≺ |`); those surface as [`Error::UndefinedUnitPair`]
/// rather than silently evaluating to zero.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("grafting requires at least 2 children, got {0}")]
    GraftArity(usize),

    #[error("the single leaf | is not allowed here")]
    LeafNotAllowed,

    #[error("{op} is undefined on the pair of units (|, |)")]
    UndefinedUnitPair { op: &'static str },

    #[error("leaf index {index} out of range 1..={leaves}")]
    LeafIndexOutOfRange { index: usize, leaves: usize },

    #[error("quasi-shuffle blocks must both be non-empty")]
    EmptyShuffleBlock,

    #[error(
        "quasi-shuffle has block sizes ({sk}, {sl}) but the comb decompositions have ({k}, {l})"
    )]
    ShuffleShapeMismatch {
        sk: usize,
        sl: usize,
        k: usize,
        l: usize,
    },

    #[error("not a valid quasi-shuffle word: {0}")]
    InvalidShuffleWord(String),

    #[error("cut is not admissible on this tree: {0}")]
    InadmissibleCut(String),

    #[error("expected a primitive basis of kind {expected}, got {got}")]
    BasisKindMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("expected a binary tree, got {0}")]
    NotBinary(String),

    #[error("forest must contain at least one tree")]
    EmptyForest,

    #[error("parse error at byte {at}: {msg}")]
    Parse { at: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
