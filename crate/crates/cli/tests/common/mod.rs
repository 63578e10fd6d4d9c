#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use brauer_ring::{BrauerContext, RPlusElement};
use group_core::{catalog, Group};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn catalog_groups(max: usize) -> Vec<Group> {
    catalog::entries().iter().map(|e| e.build()).filter(|g| g.order() <= max).collect()
}

/// A sum of one to four pairs above {e} with coefficients in [−3, 3].
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

pub fn binary() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_monomial"))
}

pub fn run(args: &[&str]) -> Output {
    Command::new(binary()).args(args).output().expect("binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}
