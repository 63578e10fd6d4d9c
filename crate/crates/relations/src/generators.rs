use std::collections::HashSet;
use std::fmt;

use brauer_ring::{brauer_map, induce_element, projector_normal, PairClass, RPlusElement};
use char_core::{characters_of, induce, Character};
use group_core::exec::{self, Strategy};
use group_core::{Embedding, Group, Subgroup};

use crate::error::RelationsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    I,
    II,
    III,
}

impl RelationKind {
    pub const ALL: [RelationKind; 3] = [RelationKind::I, RelationKind::II, RelationKind::III];
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::I => "I",
            RelationKind::II => "II",
            RelationKind::III => "III",
        })
    }
}

impl std::str::FromStr for RelationKind {
    type Err = RelationsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "I" | "1" => Ok(RelationKind::I),
            "II" | "2" => Ok(RelationKind::II),
            "III" | "3" => Ok(RelationKind::III),
            other => Err(RelationsError::UnknownKind(other.to_string())),
        }
    }
}

/// Data singling out a basic relation.  Subgroups and characters live in Ω.
#[derive(Clone, Debug)]
pub enum Witness {
    /// K ⊴ B of prime index, χ ∈ B*.
    TypeI { k: Subgroup, chi: Character },
    /// Z ⊴ B with B/Z ≅ (ℤ/ℓ)², η on Z/[Z,B], and the two extensions compared.
    TypeII { z: Subgroup, eta: Character, first: Character, second: Character },
    /// H < B maximal and not normal, K its core in B, C the complement.
    TypeIII { h: Subgroup, core: Subgroup, complement: Subgroup, chi: Character },
}

/// An element of Ker(φ_Ω) induced from a relation inside B.
#[derive(Clone, Debug)]
pub struct BasicRelation {
    pub kind: RelationKind,
    pub b: Subgroup,
    pub witness: Witness,
    pub element: RPlusElement,
}

/// Which subgroups B the enumeration runs over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Scope {
    /// One B per conjugacy class; Ω-conjugate B give equal elements.
    #[default]
    ClassRepresentatives,
    /// Every subgroup B.
    AllSubgroups,
}

/// Enumeration settings.
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub scope: Scope,
    pub strategy: Strategy,
    /// Keep every configuration, even when its element repeats an earlier one.
    pub keep_duplicates: bool,
}

/// B ⊇ N in the chosen scope.
fn candidate_subgroups(g: &Group, n: &Subgroup, scope: Scope) -> Vec<Subgroup> {
    let all: Vec<Subgroup> = match scope {
        Scope::ClassRepresentatives => g.lattice().class_reps().into_iter().cloned().collect(),
        Scope::AllSubgroups => g.subgroups().to_vec(),
    };
    all.into_iter().filter(|b| n.is_subgroup_of(b)).collect()
}

/// A subgroup B of Ω as a group, with the image of N.
struct Local {
    emb: Embedding,
    lower: Subgroup,
}

impl Local {
    fn new(g: &Group, b: &Subgroup, n: &Subgroup) -> Local {
        let emb = g.embed(b);
        let lower = emb.image(n);
        Local { emb, lower }
    }

    fn group(&self) -> &Group {
        self.emb.group()
    }

    fn lift(&self, h: &Subgroup) -> Subgroup {
        self.emb.preimage(h)
    }

    fn lift_character(&self, chi: &Character) -> Character {
        chi.relabel(self.lift(chi.domain()))
    }

    /// Ind_B^Ω, with lower bound N.
    fn induce(&self, x: &RPlusElement, n: &Subgroup) -> Result<RPlusElement, RelationsError> {
        Ok(induce_element(x, &self.emb).with_lower(n)?)
    }

    fn zero(&self) -> RPlusElement {
        RPlusElement::zero_over(self.group(), &self.lower).expect("N is normal in B")
    }
}

fn prime_of(n: usize) -> Option<usize> {
    (n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))).then_some(n)
}

fn type_i_in(local: &Local, n: &Subgroup) -> Result<Vec<BasicRelation>, RelationsError> {
    let bg = local.group();
    let whole = bg.whole();
    let chars = characters_of(bg, &whole);
    let mut out = Vec::new();
    for k in bg.normal_subgroups() {
        if prime_of(whole.order() / k.order()).is_none() || k == whole || !local.lower.is_subgroup_of(&k) {
            continue;
        }
        let trivial_on_k: Vec<&Character> = chars.iter().filter(|mu| mu.is_trivial_on(&k)).collect();
        for chi in &chars {
            let mut x = local.zero();
            x.add_pair(&chi.restrict(bg, &k), 1)?;
            for mu in &trivial_on_k {
                x.add_pair(&chi.mul(mu), -1)?;
            }
            out.push(BasicRelation {
                kind: RelationKind::I,
                b: local.emb.top().clone(),
                witness: Witness::TypeI { k: local.lift(&k), chi: local.lift_character(chi) },
                element: local.induce(&x, n)?,
            });
        }
    }
    Ok(out)
}

/// Whether B/Z is elementary abelian of order ℓ².
fn bicyclic_prime(bg: &Group, z: &Subgroup) -> Option<usize> {
    let index = bg.order() / z.order();
    let p = (2..=index).find(|d| index.is_multiple_of(*d))?;
    if p * p != index || !bg.derived_subgroup(&bg.whole()).is_subgroup_of(z) {
        return None;
    }
    bg.elements().all(|x| z.contains(bg.pow(x, p as i64))).then_some(p)
}

fn type_ii_in(local: &Local, n: &Subgroup) -> Result<Vec<BasicRelation>, RelationsError> {
    let bg = local.group();
    let whole = bg.whole();
    let derived = bg.derived_subgroup(&whole);
    let mut out = Vec::new();
    for z in bg.normal_subgroups() {
        if !local.lower.is_subgroup_of(&z) {
            continue;
        }
        let Some(ell) = bicyclic_prime(bg, &z) else { continue };
        let zb = bg.commutator_subgroup(&z, &whole);
        if derived.order() != ell * zb.order() {
            continue;
        }
        let intermediate: Vec<Subgroup> = bg.subgroups_between(&z, &whole).into_iter().filter(|h| h.order() == z.order() * ell).collect();
        debug_assert_eq!(intermediate.len(), ell + 1);
        for eta in characters_of(bg, &z) {
            if !eta.is_trivial_on(&zb) || eta.is_trivial_on(&derived) {
                continue;
            }
            let mut extensions = Vec::with_capacity(intermediate.len());
            for h in &intermediate {
                if !bg.derived_subgroup(h).is_subgroup_of(&zb) {
                    return Err(RelationsError::SideCondition("[H,H] ≤ [Z,B] fails".into()));
                }
                let ext = characters_of(bg, h)
                    .into_iter()
                    .find(|c| c.restrict(bg, &z) == eta)
                    .ok_or_else(|| RelationsError::SideCondition("η does not extend".into()))?;
                let ind = induce(&ext, bg)?;
                if ind.inner_int(&ind) != Some(1) {
                    return Err(RelationsError::SideCondition("Ind_H^B(η^H) is not irreducible".into()));
                }
                extensions.push(ext);
            }
            for (i, first) in extensions.iter().enumerate() {
                for (j, second) in extensions.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let mut x = local.zero();
                    x.add_pair(first, 1)?;
                    x.add_pair(second, -1)?;
                    out.push(BasicRelation {
                        kind: RelationKind::II,
                        b: local.emb.top().clone(),
                        witness: Witness::TypeII {
                            z: local.lift(&z),
                            eta: local.lift_character(&eta),
                            first: local.lift_character(first),
                            second: local.lift_character(second),
                        },
                        element: local.induce(&x, n)?,
                    });
                }
            }
        }
    }
    Ok(out)
}

fn type_iii_in(local: &Local, n: &Subgroup) -> Result<Vec<BasicRelation>, RelationsError> {
    let bg = local.group();
    let whole = bg.whole();
    let chars = characters_of(bg, &whole);
    let mut out = Vec::new();
    for h in bg.maximal_subgroups_of(&whole) {
        // normal maximal subgroups give the type-I relations
        if bg.is_normal(&h) {
            continue;
        }
        let cert = type3::is_type_iii(bg, &h)?;
        if !local.lower.is_subgroup_of(cert.core()) {
            continue;
        }
        let c = cert.complement();
        for chi in &chars {
            let start = RPlusElement::generator(bg, &chi.restrict(bg, &h)).with_lower(&local.lower)?;
            let x = start.sub(&projector_normal(&start, c)?).with_lower(&local.lower)?;
            out.push(BasicRelation {
                kind: RelationKind::III,
                b: local.emb.top().clone(),
                witness: Witness::TypeIII {
                    h: local.lift(&h),
                    core: local.lift(cert.core()),
                    complement: local.lift(c),
                    chi: local.lift_character(chi),
                },
                element: local.induce(&x, n)?,
            });
        }
    }
    Ok(out)
}

fn generate(
    g: &Group,
    n: &Subgroup,
    kind: RelationKind,
    options: Options,
) -> Result<Vec<BasicRelation>, RelationsError> {
    if !g.is_normal(n) {
        return Err(RelationsError::NotNormal);
    }
    let bs = candidate_subgroups(g, n, options.scope);
    let per_b = exec::map(options.strategy, &bs, |b| {
        let local = Local::new(g, b, n);
        match kind {
            RelationKind::I => type_i_in(&local, n),
            RelationKind::II => type_ii_in(&local, n),
            RelationKind::III => type_iii_in(&local, n),
        }
    });
    let mut seen: HashSet<Vec<(PairClass, i64)>> = HashSet::new();
    let mut out = Vec::new();
    for rel in per_b.into_iter().collect::<Result<Vec<_>, _>>()?.into_iter().flatten() {
        if !brauer_map(&rel.element).is_zero() {
            return Err(RelationsError::NotInKernel(rel.kind));
        }
        if options.keep_duplicates {
            out.push(rel);
            continue;
        }
        if rel.element.is_zero() {
            continue;
        }
        let key: Vec<(PairClass, i64)> = rel.element.terms().map(|(c, k)| (c.clone(), k)).collect();
        if seen.insert(key) {
            out.push(rel);
        }
    }
    Ok(out)
}

/// Type-I relations Ind_B^Ω([K, χ_K] − Σ_{μ ∈ (B/K)*} (B, χμ)) with N ≤ K.
pub fn gen_type_i(g: &Group, n: &Subgroup) -> Result<Vec<BasicRelation>, RelationsError> {
    generate(g, n, RelationKind::I, Options::default())
}

/// Type-II relations Ind_B^Ω([H₁, η^{H₁}] − [H₂, η^{H₂}]) with N ≤ Z.
pub fn gen_type_ii(g: &Group, n: &Subgroup) -> Result<Vec<BasicRelation>, RelationsError> {
    generate(g, n, RelationKind::II, Options::default())
}

/// Type-III relations Ind_B^Ω([H, χ_H] − Φ_C([H, χ_H])) with N ≤ core_B(H).
pub fn gen_type_iii(g: &Group, n: &Subgroup) -> Result<Vec<BasicRelation>, RelationsError> {
    generate(g, n, RelationKind::III, Options::default())
}

/// All relations of the given kinds, in kind order, deduplicated per kind.
pub fn generate_relations(
    g: &Group,
    n: &Subgroup,
    kinds: &[RelationKind],
    options: Options,
) -> Result<Vec<BasicRelation>, RelationsError> {
    let mut kinds = kinds.to_vec();
    kinds.sort();
    kinds.dedup();
    let mut out = Vec::new();
    for kind in kinds {
        out.extend(generate(g, n, kind, options)?);
    }
    Ok(out)
}
