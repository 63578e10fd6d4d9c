//! Finite groups given by multiplication tables.
//!
//! Elements are indices `0..n` with `0` the identity.  Subgroups are sorted
//! element lists backed by a bitset, so equality is structural.  Everything
//! here is exhaustive: the groups of interest have order at most a few hundred.

mod bitset;
pub mod catalog;
mod error;
pub mod exec;
mod group;
mod lattice;
mod section;
mod subgroup;

pub use bitset::ElementSet;
pub use error::{AxiomViolation, GroupError};
pub use group::{Elem, Group, DEFAULT_MAX_ORDER};
pub use lattice::SubgroupLattice;
pub use section::{Embedding, QuotientMap, Section};
pub use subgroup::Subgroup;

/// Parse a group file and validate it (axioms, solvability, order cap).
pub fn load_group(text: &str) -> Result<Group, GroupError> {
    Group::parse(text, DEFAULT_MAX_ORDER)
}
