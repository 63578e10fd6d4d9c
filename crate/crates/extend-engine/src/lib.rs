//! Functions Δ on monomial pairs (H, χ) with N ≤ H ≤ Ω, the three
//! conditions for extending them, the λ-function recursion and the
//! extension ℱ to virtual representations.

mod conditions;
mod delta;
mod error;
mod extension;
mod lambda;
mod value;

pub use conditions::{check_condition, check_condition_i, check_condition_ii, check_condition_iii, check_conditions, Violation};
pub use delta::DeltaFunction;
pub use error::ExtendError;
pub use extension::{extend, uniqueness_check, ExtendOptions, Extension};
pub use group_core::exec::Strategy;
pub use lambda::{
    LambdaEngine, LambdaOptions, LambdaProperty, LambdaTable, LambdaViolation, LayerChoice, RepresentativeChoice,
};
pub use relations::RelationKind;
pub use value::{FreeAbelian, ValueGroup};
