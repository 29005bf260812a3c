use thiserror::Error;

use crate::alphabet::LieKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {0} outside 2..=32")]
    RankOutOfRange(usize),
    #[error("letter {letter} does not belong to the alphabet of {kind}")]
    IllegalLetter { letter: String, kind: LieKind },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("mismatched types or ranks")]
    KindMismatch,
    #[error("not a highest weight vertex")]
    NotHighestWeight,
    #[error("component exceeds the cap of {cap} vertices")]
    ComponentTooLarge { cap: usize },
    #[error("highest weight vertex is not a concatenation of fundamental generators")]
    NotStretchable,
    #[error("malformed column: {0}")]
    MalformedColumn(String),
    #[error("column cannot be split: {0}")]
    CannotSplit(String),
    #[error("column word does not satisfy the contraction premise: {0}")]
    NotContractible(String),
    #[error("insertion rewriting is ambiguous at {0}")]
    InsertionAmbiguity(String),
    #[error("no relation applies during insertion at {0}")]
    InsertionStuck(String),
    #[error("not an orthogonal tableau: {0}")]
    NotOrthogonal(String),
    #[error("not a spin tableau: {0}")]
    NotSpinTableau(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid oscillating tableau: {0}")]
    InvalidOscillating(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid skew tableau: {0}")]
    InvalidSkew(String),
    #[error("sliding produced an inconsistent result: {0}")]
    SlideDivergence(String),
    #[error("spin relation does not apply: {0}")]
    SpinRelation(String),
    #[error("internal consistency violation: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
