#![allow(dead_code)]

use brauer_ring::{BrauerContext, RPlusElement};
use char_core::{characters_of, Character};
use group_core::{catalog, Group, Subgroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn group(name: &str) -> Group {
    catalog::by_name(name).unwrap()
}

/// Catalog groups up to the given order.
pub fn small_groups(max: usize) -> Vec<Group> {
    catalog::entries().iter().map(|e| e.build()).filter(|g| g.order() <= max).collect()
}

/// The unique subgroup with these elements.
pub fn sub(g: &Group, elements: &[usize]) -> Subgroup {
    g.subgroup(elements).unwrap()
}

pub fn chars(g: &Group, h: &Subgroup) -> Vec<Character> {
    characters_of(g, h)
}

pub fn random_element(g: &Group, rng: &mut ChaCha8Rng) -> RPlusElement {
    let ctx = BrauerContext::shared(g, &g.trivial()).unwrap();
    let classes = ctx.classes();
    let mut x = RPlusElement::zero(g);
    for _ in 0..rng.random_range(1..=4) {
        let c = &classes[rng.random_range(0..classes.len())];
        x.add_term(c.clone(), rng.random_range(-3..=3)).unwrap();
    }
    x
}
