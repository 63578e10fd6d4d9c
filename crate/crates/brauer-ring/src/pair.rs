use std::fmt;

use char_core::Character;
use group_core::{Elem, Group, Subgroup};

/// The Ω-conjugacy class [H, χ] of a pair, stored by its canonical member:
/// the least conjugate by (sorted elements of H, exponent tuple of χ).
///
/// The derived order on classes is the canonical basis order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairClass {
    character: Character,
}

impl PairClass {
    pub fn subgroup(&self) -> &Subgroup {
        self.character.domain()
    }

    pub fn character(&self) -> &Character {
        &self.character
    }

    /// All Ω-conjugates (H^g, χ^g), sorted and without repetition.
    pub fn members(&self, g: &Group) -> Vec<Character> {
        let mut out: Vec<Character> = g.elements().map(|x| self.character.conjugate(g, x)).collect();
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Debug for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.character.to_literal())
    }
}

/// The class of (H, χ) in Ω = `g`.
pub fn pair_class(g: &Group, chi: &Character) -> PairClass {
    let best = g
        .elements()
        .map(|x: Elem| chi.conjugate(g, x))
        .min()
        .expect("groups are non-empty");
    PairClass { character: best }
}
