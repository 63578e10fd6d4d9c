use thiserror::Error;

/// Which group axiom a table violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    RowLength { row: usize, len: usize },
    OutOfRange { row: usize, col: usize, value: usize },
    Identity { element: usize },
    Associativity { a: usize, b: usize, c: usize },
    Inverse { element: usize },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomViolation::RowLength { row, len } => write!(f, "row {row} has {len} entries"),
            AxiomViolation::OutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is out of range")
            }
            AxiomViolation::Identity { element } => {
                write!(f, "0 is not a two-sided identity for element {element}")
            }
            AxiomViolation::Associativity { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
            AxiomViolation::Inverse { element } => write!(f, "element {element} has no inverse"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("not a group: {0}")]
    NotAGroup(AxiomViolation),
    #[error("group of order {0} is not solvable")]
    NotSolvable(usize),
    #[error("group order {order} exceeds the cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("unknown catalog group `{0}`")]
    UnknownGroup(String),
}
