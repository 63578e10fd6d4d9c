use std::collections::BTreeMap;

use brauer_ring::RPlusElement;
use char_core::Character;
use group_core::{Embedding, Group, Subgroup};

use crate::error::RelationsError;

/// The part of an element whose pairs restrict on N into one Ω-orbit ξ.
#[derive(Clone, Debug)]
pub struct XiBlock {
    pub normal: Subgroup,
    /// The orbit ξ of characters of N, sorted; the first is the representative.
    pub orbit: Vec<Character>,
    pub component: RPlusElement,
}

impl XiBlock {
    pub fn representative(&self) -> &Character {
        &self.orbit[0]
    }
}

fn orbit_of(g: &Group, mu: &Character) -> Vec<Character> {
    let mut out: Vec<Character> = g.elements().map(|x| mu.conjugate(g, x)).collect();
    out.sort();
    out.dedup();
    out
}

/// Split x ∈ R₊(N ≤ Ω) into blocks by the orbit of χ|_N.  Blocks come in
/// order of their representative.
pub fn xi_decompose(x: &RPlusElement, n: &Subgroup) -> Result<Vec<XiBlock>, RelationsError> {
    let g = x.group();
    if !g.is_normal(n) {
        return Err(RelationsError::NotNormal);
    }
    let mut blocks: BTreeMap<Character, XiBlock> = BTreeMap::new();
    for (class, k) in x.terms() {
        let chi = class.character();
        if !n.is_subgroup_of(chi.domain()) {
            return Err(RelationsError::BelowNormal);
        }
        let orbit = orbit_of(g, &chi.restrict(g, n));
        let key = orbit[0].clone();
        let block = match blocks.entry(key) {
            std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::btree_map::Entry::Vacant(e) => e.insert(XiBlock {
                normal: n.clone(),
                orbit,
                component: RPlusElement::zero_over(g, n)?,
            }),
        };
        block.component.add_term(class.clone(), k)?;
    }
    Ok(blocks.into_values().collect())
}

/// ρ_μ over the stabilizer Ω_μ of μ ∈ N*: for each pair class of x over the
/// orbit of μ, its members with χ|_N = μ form one Ω_μ-class.
#[derive(Clone, Debug)]
pub struct MuComponent {
    pub stabilizer: Embedding,
    pub component: RPlusElement,
}

impl MuComponent {
    /// Ind_{Ω_μ}^Ω(ρ_μ) with lower bound N.
    pub fn induced(&self, n: &Subgroup) -> Result<RPlusElement, RelationsError> {
        Ok(brauer_ring::induce_element(&self.component, &self.stabilizer).with_lower(n)?)
    }
}

pub fn mu_component(x: &RPlusElement, mu: &Character) -> Result<MuComponent, RelationsError> {
    let g = x.group();
    let n = mu.domain();
    if !g.is_normal(n) {
        return Err(RelationsError::NotNormal);
    }
    let stab: Vec<_> = g.elements().filter(|&y| mu.conjugate(g, y) == *mu).collect();
    let stabilizer = g.embed(&g.subgroup(&stab)?);
    let local = stabilizer.group();
    let mut component = RPlusElement::zero_over(local, &stabilizer.image(n))?;
    for (class, k) in x.terms() {
        if !n.is_subgroup_of(class.subgroup()) {
            return Err(RelationsError::BelowNormal);
        }
        let Some(member) = class.members(g).into_iter().find(|chi| chi.restrict(g, n) == *mu) else {
            continue;
        };
        let image = stabilizer.image(member.domain());
        component.add_pair(&member.relabel(image), k)?;
    }
    Ok(MuComponent { stabilizer, component })
}
