use std::cmp::Ordering;

use crate::bitset::ElementSet;
use crate::group::Elem;

/// A subgroup as a strictly sorted element list plus a membership bitset.
///
/// Subgroups carry no reference to their parent; operations that need the
/// multiplication take the [`Group`](crate::Group) explicitly.  Ordering is by
/// order first, then lexicographically by element list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    set: ElementSet,
    elements: Vec<Elem>,
}

impl Subgroup {
    /// Build from a membership set. Closure is the caller's responsibility.
    pub(crate) fn from_set(set: ElementSet) -> Self {
        let elements = set.iter().collect();
        Subgroup { set, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.set.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.set.is_subset(&other.set)
    }

    /// Position of `x` in the sorted element list.
    pub fn position(&self, x: Elem) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// Index (other : self); panics unless `self` lies in `other`.
    pub fn index_in(&self, other: &Subgroup) -> usize {
        assert!(self.is_subgroup_of(other), "index of a non-subgroup");
        other.order() / self.order()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_set(self.set.intersection(&other.set))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl std::fmt::Display for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}
