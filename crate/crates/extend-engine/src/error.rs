use brauer_ring::BrauerError;
use char_core::CharError;
use group_core::GroupError;
use relations::{RelationKind, RelationsError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExtendError {
    #[error("no value for the pair {0}")]
    MissingValue(String),
    #[error("Δ(H, 1) must be 1, got {0} on {1}")]
    TrivialNotOne(String, String),
    #[error("pair {0} lies below N")]
    BelowLowerBound(String),
    #[error("condition {kind} fails: {witness}")]
    ConditionsViolated { kind: RelationKind, witness: String },
    #[error("relation maps to {value} instead of 1: {relation}")]
    NotWellDefined { relation: String, value: String },
    #[error("subgroup does not contain N or is not contained in the ambient group")]
    OutOfRange,
    #[error("invalid value: {0}")]
    Parse(String),
    #[error("N is not normal")]
    NotNormal,
    #[error(transparent)]
    Brauer(#[from] BrauerError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Relations(#[from] RelationsError),
}
