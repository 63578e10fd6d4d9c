//! R₊(N≤Ω): integer combinations of conjugacy classes of pairs [H, χ] with
//! a linear character χ of H ⊇ N, the Brauer map to virtual characters, the
//! projectors Φ_C and integer presentations and kernels.

mod context;
mod element;
mod error;
pub mod linalg;
mod pair;
mod projector;

pub use context::{dim0_element, dim0_presentation, kernel_basis, presentation, BrauerContext};
pub use element::{
    brauer_map, deflate_character, deflate_element, double_coset_reps, induce_element, inflate_character,
    inflate_element, multiply, restrict_element, RPlusElement,
};
pub use error::BrauerError;
pub use linalg::{Lattice, PivotRule};
pub use pair::{pair_class, PairClass};
pub use projector::{orbit_data, product_extension, projector_normal, projector_phi, Orbit, OrbitData};
