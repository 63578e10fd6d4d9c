use brauer_ring::BrauerError;
use char_core::CharError;
use group_core::GroupError;
use thiserror::Error;

use crate::generators::RelationKind;

#[derive(Debug, Error)]
pub enum RelationsError {
    #[error("N is not normal")]
    NotNormal,
    #[error("a pair lies below N")]
    BelowNormal,
    #[error("unknown relation kind {0:?}")]
    UnknownKind(String),
    #[error("type-{0} relation is not in the kernel of φ")]
    NotInKernel(RelationKind),
    #[error("side condition failed: {0}")]
    SideCondition(String),
    #[error("span of relations is not inside the kernel")]
    SpanOutsideKernel,
    #[error(transparent)]
    Brauer(#[from] BrauerError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Type3(#[from] type3::Type3Error),
}
