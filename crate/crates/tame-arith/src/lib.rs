//! Finite-field Gauss sums and tame local root numbers.
//!
//! A tame character of a local field E is a pair (χ̄, z) on the tame
//! quotient π_E^ℤ × κ_E^×.  Root numbers are exact elements c·p^{k/2} of
//! cyclotomic fields.  The Galois models turn root numbers into functions
//! Δ on monomial pairs of a finite Galois group, ready for the extension
//! engine.

mod checks;
mod error;
mod field;
mod galois;
mod gauss;
mod root;
mod tame;

pub use checks::{
    check_dh_i, check_dh_i_batch, check_dh_iii_batch, check_dh_iii_tame, check_dh_iii_with, conductor_inductivity, functional_equation, odd_order_reduction,
    r1_fibre_matches, r1_twist_exponents, twist_identity, ConductorCheck, DhReport, Identity, TypeThreeSetup,
};
pub use error::TameError;
pub use field::{prime_power, FiniteField, SubfieldEmbedding};
pub use galois::{galois_delta, GaloisModel, Realization};
pub use gauss::{gauss_sum, AdditiveCharacter, MultiplicativeCharacter};
pub use root::{sqrt_prime, RootValue};
pub use tame::{
    abelian_case, closure_degree, norm_characters, root_number, twist_exponent, AbelianCase, TameChar, TameField,
};
