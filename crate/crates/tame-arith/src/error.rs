use thiserror::Error;

#[derive(Debug, Error)]
pub enum TameError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("conductor {0} is not tame (at most 1)")]
    NotTame(u32),
    #[error("conductor {conductor} does not match residue exponent {residue}")]
    ConductorMismatch { conductor: u32, residue: u64 },
    #[error("ramification index {e} is divisible by the residue characteristic {p}")]
    WildRamification { e: u64, p: u64 },
    #[error("not an abelian tame case: {0}")]
    NotAbelianTameCase(String),
    #[error("degenerate case: {0}")]
    DegenerateCase(String),
    #[error("unsupported Galois model: {0}")]
    UnsupportedModel(String),
    #[error("F_{sub} is not a subfield of F_{field}")]
    NotASubfield { sub: u64, field: u64 },
    #[error("fields over different bases")]
    BaseMismatch,
    #[error("extensions are taken over the base field only")]
    NotOverBase,
    #[error("character value {0} is not in the residue field character group")]
    BadCharacterValue(String),
    #[error("malformed root value literal {0:?}")]
    Parse(String),
    #[error(transparent)]
    Extend(#[from] extend_engine::ExtendError),
    #[error(transparent)]
    Group(#[from] group_core::GroupError),
}
