#![allow(dead_code)]

use group_core::{catalog, Elem, Group, Subgroup};

pub fn group(name: &str) -> Group {
    catalog::by_name(name).unwrap()
}

pub fn groups_up_to(max: usize) -> Vec<Group> {
    catalog::entries().iter().map(|e| e.build()).filter(|g| g.order() <= max).collect()
}

pub fn sub(g: &Group, elems: &[Elem]) -> Subgroup {
    g.subgroup(elems).unwrap()
}
