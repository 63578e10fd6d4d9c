//! Exact character theory for finite groups.
//!
//! Values live in cyclotomic fields and are compared exactly.  Linear
//! characters are stored as exponent vectors; class functions hold one
//! cyclotomic value per conjugacy class.

mod character;
mod class_function;
mod cyclotomic;
mod error;
mod root;
mod table;

pub use character::{abelianization_exponent, characters_of, Character};
pub use class_function::{induce, induce_class_function, inner_product, restrict, ClassFunction};
pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, Rational};
pub use error::CharError;
pub use root::RootOfUnity;
pub use table::{character_table, CharacterTable};
