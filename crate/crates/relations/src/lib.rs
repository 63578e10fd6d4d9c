//! Basic relations of types I, II and III in Ker(φ), their ξ-blocks, and the
//! lattice comparison of Ker(φ_{N≤Ω}) with their span.
//!
//! Relations are built inside each subgroup B (one per conjugacy class by
//! default) and induced to Ω; elements equal in R₊(≤Ω) are kept once.

mod error;
mod generators;
mod theorem;
mod xi;

pub use error::RelationsError;
pub use generators::{
    gen_type_i, gen_type_ii, gen_type_iii, generate_relations, BasicRelation, Options, RelationKind, Scope, Witness,
};
pub use group_core::exec::Strategy;
pub use theorem::{verify_kernel_equality, verify_kernel_span, KernelReport};
pub use xi::{mu_component, xi_decompose, MuComponent, XiBlock};
