use crate::bitset::ElementSet;
use crate::error::GroupError;
use crate::group::{Elem, Group};
use crate::subgroup::Subgroup;

/// A section `top / bottom` of a parent group, realised as its own group.
///
/// Cosets are labelled in order of their least element, so with a trivial
/// bottom the labelling is the order-preserving relabelling of `top`.
#[derive(Clone, Debug)]
pub struct Section {
    parent: Group,
    top: Subgroup,
    bottom: Subgroup,
    group: Group,
    projection: Vec<Option<Elem>>,
    cosets: Vec<Vec<Elem>>,
}

/// `G → G/N`
pub type QuotientMap = Section;
/// A subgroup viewed as a group in its own right.
pub type Embedding = Section;

impl Section {
    pub(crate) fn new(parent: &Group, top: &Subgroup, bottom: &Subgroup) -> Result<Section, GroupError> {
        if !bottom.is_subgroup_of(top) {
            return Err(GroupError::NotASubgroup);
        }
        if !parent.is_normal_in(bottom, top) {
            return Err(GroupError::NotNormal);
        }
        let mut projection = vec![None; parent.order()];
        let mut cosets: Vec<Vec<Elem>> = Vec::new();
        for &x in top.elements() {
            if projection[x].is_some() {
                continue;
            }
            let mut coset: Vec<Elem> = bottom.elements().iter().map(|&k| parent.mul(x, k)).collect();
            coset.sort_unstable();
            for &y in &coset {
                projection[y] = Some(cosets.len());
            }
            cosets.push(coset);
        }
        let m = cosets.len();
        let mut rows = vec![vec![0; m]; m];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = projection[parent.mul(cosets[i][0], cosets[j][0])].expect("closed");
            }
        }
        let group = Group::from_table(rows, None).expect("sections of groups are groups");
        Ok(Section { parent: parent.clone(), top: top.clone(), bottom: bottom.clone(), group, projection, cosets })
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn top(&self) -> &Subgroup {
        &self.top
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.bottom
    }

    /// The section as a group.
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn try_project(&self, x: Elem) -> Option<Elem> {
        self.projection.get(x).copied().flatten()
    }

    /// Image of `x ∈ top`; panics outside `top`.
    pub fn project(&self, x: Elem) -> Elem {
        self.try_project(x).expect("element outside the section")
    }

    /// Least representative of the coset labelled `q`.
    pub fn lift(&self, q: Elem) -> Elem {
        self.cosets[q][0]
    }

    pub fn coset(&self, q: Elem) -> &[Elem] {
        &self.cosets[q]
    }

    /// Image of a subgroup of `top`.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let set = ElementSet::from_elements(self.group.order(), h.elements().iter().map(|&x| self.project(x)));
        Subgroup::from_set(set)
    }

    /// Full preimage in the parent of a subgroup of the section.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let set = ElementSet::from_elements(
            self.parent.order(),
            h.elements().iter().flat_map(|&q| self.cosets[q].iter().copied()),
        );
        Subgroup::from_set(set)
    }
}
