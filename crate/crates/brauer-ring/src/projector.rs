use char_core::{characters_of, Character};
use group_core::{Group, Subgroup};

use crate::element::{deflate_element, inflate_element, RPlusElement};
use crate::error::BrauerError;

/// One H-orbit in S(χ).
#[derive(Clone, Debug)]
pub struct Orbit {
    pub representative: Character,
    pub members: Vec<Character>,
    /// H_μ for the representative μ.
    pub stabilizer: Subgroup,
}

/// S(χ), its H-orbits and their stabilizers, for a pair (H, χ) and an
/// abelian normal subgroup C.
#[derive(Clone, Debug)]
pub struct OrbitData {
    pub pair: Character,
    pub normal: Subgroup,
    /// Characters μ of C agreeing with χ on H ∩ C, sorted.
    pub s: Vec<Character>,
    /// Orbits in order of their least member.
    pub orbits: Vec<Orbit>,
}

impl OrbitData {
    /// T(χ): the least member of each orbit.
    pub fn t(&self) -> Vec<&Character> {
        self.orbits.iter().map(|o| &o.representative).collect()
    }
}

fn check_abelian_normal(g: &Group, c: &Subgroup) -> Result<(), BrauerError> {
    if g.is_normal(c) && g.subgroup_is_abelian(c) {
        Ok(())
    } else {
        Err(BrauerError::CNotAbelianNormal)
    }
}

pub fn orbit_data(g: &Group, chi: &Character, c: &Subgroup) -> Result<OrbitData, BrauerError> {
    check_abelian_normal(g, c)?;
    let h = chi.domain();
    let meet = h.intersection(c);
    let target = chi.restrict(g, &meet);
    let s: Vec<Character> = characters_of(g, c).into_iter().filter(|mu| mu.restrict(g, &meet) == target).collect();
    assert_eq!(s.len(), c.order() / meet.order(), "#S(χ) = (C : H∩C)");
    let mut placed = vec![false; s.len()];
    let mut orbits = Vec::new();
    for i in 0..s.len() {
        if placed[i] {
            continue;
        }
        let mu = &s[i];
        let mut members = Vec::new();
        let mut stab = Vec::new();
        for &x in h.elements() {
            let image = mu.conjugate(g, x);
            if image == *mu {
                stab.push(x);
            }
            let j = s.binary_search(&image).expect("S(χ) is H-stable");
            if !placed[j] {
                placed[j] = true;
                members.push(image);
            }
        }
        members.sort();
        orbits.push(Orbit { representative: mu.clone(), members, stabilizer: g.subgroup(&stab).expect("stabilizers are subgroups") });
    }
    Ok(OrbitData { pair: chi.clone(), normal: c.clone(), s, orbits })
}

/// χμ on H_μ·C: hc ↦ χ(h)μ(c).
pub fn product_extension(g: &Group, chi: &Character, mu: &Character, stabilizer: &Subgroup) -> Character {
    let c = mu.domain();
    let domain = g.join(stabilizer, c);
    Character::from_fn(g, &domain, |x| {
        let h = stabilizer
            .elements()
            .iter()
            .copied()
            .find(|&h| c.contains(g.mul(g.inv(h), x)))
            .expect("x lies in H_μ·C");
        chi.value(h).mul(&mu.value(g.mul(g.inv(h), x)))
    })
    .expect("χμ is a character on H_μ·C")
}

/// Φ_C([H, χ]) = Σ_{μ ∈ T(χ)} [H_μ C, χμ] for an abelian normal C.
pub fn projector_phi(x: &RPlusElement, c: &Subgroup) -> Result<RPlusElement, BrauerError> {
    let g = x.group();
    check_abelian_normal(g, c)?;
    let mut out = RPlusElement::zero_over(g, c)?;
    for (class, n) in x.terms() {
        let chi = class.character();
        if c.is_subgroup_of(chi.domain()) {
            out.add_term(class.clone(), n)?;
            continue;
        }
        let data = orbit_data(g, chi, c)?;
        for orbit in &data.orbits {
            let stab_chi = chi.restrict(g, &orbit.stabilizer);
            out.add_pair(&product_extension(g, &stab_chi, &orbit.representative, &orbit.stabilizer), n)?;
        }
    }
    Ok(out)
}

/// Φ_N for any normal N, computed modulo [N,N] where N is abelian.  Every
/// pair of `x` must live modulo [N,N].
pub fn projector_normal(x: &RPlusElement, n: &Subgroup) -> Result<RPlusElement, BrauerError> {
    let g = x.group();
    if !g.is_normal(n) {
        return Err(BrauerError::NotNormal);
    }
    if g.subgroup_is_abelian(n) {
        return projector_phi(x, n);
    }
    let q = g.quotient(&g.derived_subgroup(n))?;
    let low = deflate_element(x, &q)?;
    let projected = projector_phi(&low, &q.image(n))?;
    inflate_element(&projected, &q).with_lower(n)
}
