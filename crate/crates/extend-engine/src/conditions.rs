use std::collections::HashMap;

use char_core::characters_of;
use group_core::exec::{self, Strategy};
use group_core::Subgroup;
use relations::{generate_relations, BasicRelation, Options, RelationKind, Scope, Witness};

use crate::delta::DeltaFunction;
use crate::error::ExtendError;
use crate::value::ValueGroup;

/// One failing instance of a condition, with both sides.
#[derive(Clone, Debug)]
pub struct Violation<A> {
    pub kind: RelationKind,
    pub b: Subgroup,
    pub witness: String,
    pub left: A,
    pub right: A,
}

impl<A: ValueGroup> Violation<A> {
    pub fn summary(&self) -> String {
        format!(
            "B={:?} {}: {} != {}",
            self.b.elements(),
            self.witness,
            self.left.to_text(),
            self.right.to_text()
        )
    }
}

fn configurations<A: ValueGroup>(
    delta: &DeltaFunction<A>,
    kind: RelationKind,
    strategy: Strategy,
) -> Result<Vec<BasicRelation>, ExtendError> {
    let options = Options { scope: Scope::ClassRepresentatives, strategy, keep_duplicates: true };
    Ok(generate_relations(delta.group(), delta.lower(), &[kind], options)?)
}

/// ∏_{μ ∈ (B/K)*} Δ(B, ψμ) over the characters of B trivial on K.
fn product_over_quotient<A: ValueGroup>(
    delta: &DeltaFunction<A>,
    b: &Subgroup,
    k: &Subgroup,
    twist: Option<&char_core::Character>,
) -> Result<A, ExtendError> {
    let g = delta.group();
    let mut acc = A::one();
    for mu in characters_of(g, b).iter().filter(|mu| mu.is_trivial_on(k)) {
        let chi = match twist {
            Some(t) => t.mul(mu),
            None => mu.clone(),
        };
        acc = acc.mul(&delta.value(&chi)?);
    }
    Ok(acc)
}

fn gather<A: ValueGroup>(
    per: Vec<Result<Option<Violation<A>>, ExtendError>>,
) -> Result<Vec<Violation<A>>, ExtendError> {
    Ok(per.into_iter().collect::<Result<Vec<_>, _>>()?.into_iter().flatten().collect())
}

/// Δ(K, χ_K)·∏_{μ∈(B/K)*} Δ(B, μ) = ∏_{μ∈(B/K)*} Δ(B, χμ) for K ⊴ B of prime
/// index with N ≤ K, and χ ∈ B*.
pub fn check_condition_i<A: ValueGroup>(
    delta: &DeltaFunction<A>,
    strategy: Strategy,
) -> Result<Vec<Violation<A>>, ExtendError> {
    let g = delta.group();
    let rels = configurations(delta, RelationKind::I, strategy)?;
    let per = exec::map(strategy, &rels, |rel| {
        let Witness::TypeI { k, chi } = &rel.witness else { unreachable!("type-I witness") };
        let left = delta.value(&chi.restrict(g, k))?.mul(&product_over_quotient(delta, &rel.b, k, None)?);
        let right = product_over_quotient(delta, &rel.b, k, Some(chi))?;
        Ok((left != right).then(|| Violation {
            kind: RelationKind::I,
            b: rel.b.clone(),
            witness: format!("K={:?} chi={}", k.elements(), chi.to_literal()),
            left,
            right,
        }))
    });
    gather(per)
}

/// Δ(H, η^H)·∏_{μ∈(B/H)*} Δ(B, μ) is the same for all pairs (H, η^H) over
/// one Heisenberg configuration (B, Z, η).
pub fn check_condition_ii<A: ValueGroup>(
    delta: &DeltaFunction<A>,
    strategy: Strategy,
) -> Result<Vec<Violation<A>>, ExtendError> {
    let rels = configurations(delta, RelationKind::II, strategy)?;
    let side = |b: &Subgroup, ext: &char_core::Character| -> Result<A, ExtendError> {
        Ok(delta.value(ext)?.mul(&product_over_quotient(delta, b, ext.domain(), None)?))
    };
    let per = exec::map(strategy, &rels, |rel| {
        let Witness::TypeII { z, eta, first, second } = &rel.witness else { unreachable!("type-II witness") };
        // both orders are generated; report each unordered pair once
        if first.domain() > second.domain() {
            return Ok(None);
        }
        let left = side(&rel.b, first)?;
        let right = side(&rel.b, second)?;
        Ok((left != right).then(|| Violation {
            kind: RelationKind::II,
            b: rel.b.clone(),
            witness: format!(
                "Z={:?} eta={} H1={:?} H2={:?}",
                z.elements(),
                eta.to_literal(),
                first.domain().elements(),
                second.domain().elements()
            ),
            left,
            right,
        }))
    });
    gather(per)
}

/// Δ(H, χ_H)·∏_μ Δ(H_μC, μ') = ∏_μ Δ(H_μC, χμ') over μ ∈ (C/K)*/H, for each
/// type-III configuration H < B and χ ∈ B*.
///
/// The relation element for χ is [H, χ_H] − Σ_μ [H_μC, χμ'], so the identity
/// says that Δ takes the same value on the elements for χ and for 1.
pub fn check_condition_iii<A: ValueGroup>(
    delta: &DeltaFunction<A>,
    strategy: Strategy,
) -> Result<Vec<Violation<A>>, ExtendError> {
    let rels = configurations(delta, RelationKind::III, strategy)?;
    let mut trivial: HashMap<(Subgroup, Subgroup), usize> = HashMap::new();
    for (i, rel) in rels.iter().enumerate() {
        let Witness::TypeIII { h, chi, .. } = &rel.witness else { unreachable!("type-III witness") };
        if chi.is_trivial() {
            trivial.insert((rel.b.clone(), h.clone()), i);
        }
    }
    let per = exec::map(strategy, &rels, |rel| {
        let Witness::TypeIII { h, core, complement, chi } = &rel.witness else { unreachable!("type-III witness") };
        if chi.is_trivial() {
            return Ok(None);
        }
        let base = &rels[trivial[&(rel.b.clone(), h.clone())]];
        let left = delta.apply(&rel.element)?;
        let right = delta.apply(&base.element)?;
        Ok((left != right).then(|| Violation {
            kind: RelationKind::III,
            b: rel.b.clone(),
            witness: format!(
                "H={:?} K={:?} C={:?} chi={}",
                h.elements(),
                core.elements(),
                complement.elements(),
                chi.to_literal()
            ),
            left,
            right,
        }))
    });
    gather(per)
}

pub fn check_condition<A: ValueGroup>(
    delta: &DeltaFunction<A>,
    kind: RelationKind,
    strategy: Strategy,
) -> Result<Vec<Violation<A>>, ExtendError> {
    match kind {
        RelationKind::I => check_condition_i(delta, strategy),
        RelationKind::II => check_condition_ii(delta, strategy),
        RelationKind::III => check_condition_iii(delta, strategy),
    }
}

/// Violations of all three conditions, in kind order.
pub fn check_conditions<A: ValueGroup>(
    delta: &DeltaFunction<A>,
    strategy: Strategy,
) -> Result<Vec<Violation<A>>, ExtendError> {
    let mut out = Vec::new();
    for kind in RelationKind::ALL {
        out.extend(check_condition(delta, kind, strategy)?);
    }
    Ok(out)
}
