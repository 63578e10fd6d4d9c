#![allow(dead_code)]

use group_core::{catalog, Elem, Group, Subgroup};

pub fn group(name: &str) -> Group {
    catalog::by_name(name).unwrap()
}

pub fn all_groups() -> Vec<Group> {
    catalog::entries().iter().map(|e| e.build()).collect()
}

pub fn sub(g: &Group, elems: &[Elem]) -> Subgroup {
    g.subgroup(elems).unwrap()
}

/// ⋂ x H x⁻¹ by direct intersection.
pub fn naive_core(g: &Group, h: &Subgroup) -> Vec<Elem> {
    h.elements()
        .iter()
        .copied()
        .filter(|&y| g.elements().all(|x| h.contains(g.conj(g.inv(x), y))))
        .collect()
}

/// Maximal subgroups by brute force over the full lattice.
pub fn naive_maximal(g: &Group) -> Vec<Subgroup> {
    let subs = g.subgroups();
    subs.iter()
        .filter(|h| h.order() < g.order())
        .filter(|h| !subs.iter().any(|x| x.order() > h.order() && x.order() < g.order() && h.is_subgroup_of(x)))
        .cloned()
        .collect()
}
