use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("values do not define a linear character: {0}")]
    NotACharacter(String),
    #[error("not a subgroup of the ambient group")]
    NotASubgroup,
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("cannot invert zero")]
    DivisionByZero,
    #[error("character table incomplete: found {found} of {classes} irreducibles")]
    IncompleteTable { found: usize, classes: usize },
    #[error("cannot parse cyclotomic literal `{0}`")]
    Parse(String),
}
