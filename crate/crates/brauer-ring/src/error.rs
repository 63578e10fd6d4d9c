use char_core::CharError;
use group_core::GroupError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BrauerError {
    #[error("subgroup is not an abelian normal subgroup")]
    CNotAbelianNormal,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("pair does not lie above the lower bound N")]
    BelowLowerBound,
    #[error("pair is not defined modulo the given normal subgroup")]
    NotInQuotient,
    #[error("elements live over different groups")]
    GroupMismatch,
    #[error("no integral solution (the input is not a virtual character of the quotient)")]
    NoSolution,
    #[error("integer overflow in lattice arithmetic")]
    Overflow,
    #[error("cannot parse element: {0}")]
    Parse(String),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
