use std::collections::HashMap;

use crate::bitset::ElementSet;
use crate::group::{Elem, Group};
use crate::subgroup::Subgroup;

/// Every subgroup of a group, grouped into conjugacy classes.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    index: HashMap<ElementSet, usize>,
}

impl SubgroupLattice {
    /// Exhaustive enumeration: every subgroup is a join of cyclic subgroups,
    /// so we close the set of cyclic subgroups under joining with one more
    /// cyclic subgroup.
    pub(crate) fn enumerate(g: &Group) -> Self {
        let mut found: HashMap<ElementSet, Vec<Elem>> = HashMap::new();
        found.insert(g.trivial().set().clone(), vec![]);
        let mut cyclic: Vec<(Elem, Subgroup)> = Vec::new();
        for x in g.elements().skip(1) {
            let c = g.generated(&[x]);
            if !found.contains_key(c.set()) {
                found.insert(c.set().clone(), vec![x]);
                cyclic.push((x, c));
            }
        }
        let mut frontier: Vec<(Subgroup, Vec<Elem>)> =
            cyclic.iter().map(|(x, c)| (c.clone(), vec![*x])).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (h, gens) in &frontier {
                for (z, c) in &cyclic {
                    if c.is_subgroup_of(h) {
                        continue;
                    }
                    let mut joined_gens = gens.clone();
                    joined_gens.push(*z);
                    let j = g.generated(&joined_gens);
                    if !found.contains_key(j.set()) {
                        found.insert(j.set().clone(), joined_gens.clone());
                        next.push((j, joined_gens));
                    }
                }
            }
            frontier = next;
        }
        let mut subgroups: Vec<Subgroup> = found.into_keys().map(Subgroup::from_set).collect();
        subgroups.sort();
        let index: HashMap<ElementSet, usize> =
            subgroups.iter().enumerate().map(|(i, h)| (h.set().clone(), i)).collect();
        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes = Vec::new();
        for i in 0..subgroups.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = g
                .elements()
                .map(|x| index[g.conjugate_subgroup(&subgroups[i], x).set()])
                .collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        SubgroupLattice { subgroups, classes, class_of, index }
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    /// Conjugacy classes as index lists into [`Self::subgroups`].
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// The least member of each conjugacy class.
    pub fn class_reps(&self) -> Vec<&Subgroup> {
        self.classes.iter().map(|c| &self.subgroups[c[0]]).collect()
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.set()).copied()
    }

    pub fn class_index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index_of(h).map(|i| self.class_of[i])
    }

    /// The canonical (least) conjugate of `h`.
    pub fn canonical_conjugate(&self, h: &Subgroup) -> &Subgroup {
        let c = self.class_index_of(h).expect("subgroup of this group");
        &self.subgroups[self.classes[c][0]]
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }
}
