use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use char_core::{characters_of, Character, RootOfUnity};
use group_core::exec::{self, Strategy};
use group_core::{Elem, Group, Subgroup};

use crate::delta::DeltaFunction;
use crate::error::ExtendError;
use crate::value::ValueGroup;

/// Which minimal abelian normal subgroup the recursion steps through.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LayerChoice {
    /// The least candidate in subgroup order.
    #[default]
    Least,
    /// The candidate at position `k` modulo the number of candidates.
    Rotate(usize),
}

/// Which member of each orbit of characters stands for the orbit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RepresentativeChoice {
    #[default]
    Least,
    Last,
}

#[derive(Clone, Copy, Debug)]
pub struct LambdaOptions {
    pub layer: LayerChoice,
    pub representative: RepresentativeChoice,
    pub memo: bool,
    pub strategy: Strategy,
}

impl Default for LambdaOptions {
    fn default() -> Self {
        LambdaOptions {
            layer: LayerChoice::Least,
            representative: RepresentativeChoice::Least,
            memo: true,
            strategy: Strategy::default(),
        }
    }
}

type Key = (Subgroup, Subgroup, Subgroup);

/// λ_U^A(Δ) for N ≤ U ≤ A ≤ Ω, computed by the minimal-normal recursion.
///
/// All subquotients stay in Ω coordinates: a level M ⊴ A with N ≤ M ≤ U
/// stands for λ_{U/M}^{A/M} of the inflated function.
pub struct LambdaEngine<'a, A: ValueGroup> {
    delta: &'a DeltaFunction<A>,
    options: LambdaOptions,
    memo: Mutex<HashMap<Key, A>>,
}

impl<'a, A: ValueGroup> LambdaEngine<'a, A> {
    pub fn new(delta: &'a DeltaFunction<A>) -> Self {
        Self::with_options(delta, LambdaOptions::default())
    }

    pub fn with_options(delta: &'a DeltaFunction<A>, options: LambdaOptions) -> Self {
        LambdaEngine { delta, options, memo: Mutex::new(HashMap::new()) }
    }

    pub fn delta(&self) -> &DeltaFunction<A> {
        self.delta
    }

    pub fn options(&self) -> LambdaOptions {
        self.options
    }

    fn group(&self) -> &Group {
        self.delta.group()
    }

    /// λ_U^Ω(Δ).
    pub fn lambda(&self, u: &Subgroup) -> Result<A, ExtendError> {
        self.lambda_in(&self.group().whole(), u)
    }

    /// λ_U^A(Δ) for N ≤ U ≤ A.
    pub fn lambda_in(&self, ambient: &Subgroup, u: &Subgroup) -> Result<A, ExtendError> {
        let n = self.delta.lower();
        if !n.is_subgroup_of(u) || !u.is_subgroup_of(ambient) {
            return Err(ExtendError::OutOfRange);
        }
        self.level(ambient, n, u)
    }

    /// λ_{U/M}^{A/M} for M ⊴ A and N ≤ M ≤ U ≤ A.
    pub fn lambda_over(&self, ambient: &Subgroup, level: &Subgroup, u: &Subgroup) -> Result<A, ExtendError> {
        let g = self.group();
        if !self.delta.lower().is_subgroup_of(level)
            || !level.is_subgroup_of(u)
            || !u.is_subgroup_of(ambient)
            || !g.is_normal_in(level, ambient)
        {
            return Err(ExtendError::OutOfRange);
        }
        self.level(ambient, level, u)
    }

    /// λ_U^H := λ_U^Ω · (λ_H^Ω)^{−(H:U)}, the form used by the extension.
    pub fn relative(&self, u: &Subgroup, h: &Subgroup) -> Result<A, ExtendError> {
        if !u.is_subgroup_of(h) {
            return Err(ExtendError::OutOfRange);
        }
        let index = (h.order() / u.order()) as i64;
        Ok(self.lambda(u)?.mul(&self.lambda(h)?.pow(-index)))
    }

    fn layer(&self, ambient: &Subgroup, level: &Subgroup) -> Result<Subgroup, ExtendError> {
        let g = self.group();
        let mut cands: Vec<Subgroup> = g
            .minimal_normal_over(level, ambient)
            .into_iter()
            .filter(|c| g.commutator_subgroup(c, c).is_subgroup_of(level))
            .collect();
        cands.sort();
        if cands.is_empty() {
            return Err(ExtendError::Group(group_core::GroupError::NotSolvable(g.order())));
        }
        Ok(match self.options.layer {
            LayerChoice::Least => cands.swap_remove(0),
            LayerChoice::Rotate(k) => {
                let i = k % cands.len();
                cands.swap_remove(i)
            }
        })
    }

    fn level(&self, ambient: &Subgroup, level: &Subgroup, u: &Subgroup) -> Result<A, ExtendError> {
        if u == ambient {
            return Ok(A::one());
        }
        let key = (ambient.clone(), level.clone(), u.clone());
        if self.options.memo {
            if let Some(v) = self.memo.lock().expect("memo lock").get(&key) {
                return Ok(v.clone());
            }
        }
        let value = self.compute(ambient, level, u)?;
        if self.options.memo {
            self.memo.lock().expect("memo lock").insert(key, value.clone());
        }
        Ok(value)
    }

    fn compute(&self, ambient: &Subgroup, level: &Subgroup, u: &Subgroup) -> Result<A, ExtendError> {
        let g = self.group();
        let layer = self.layer(ambient, level)?;
        if layer.is_subgroup_of(u) {
            return self.level(ambient, &layer, u);
        }
        let meet = u.intersection(&layer);
        let mut remaining: Vec<Character> =
            characters_of(g, &layer).into_iter().filter(|mu| mu.is_trivial_on(&meet)).collect();
        let mut acc = A::one();
        while !remaining.is_empty() {
            let first = remaining[0].clone();
            let mut orbit: Vec<Character> = u.elements().iter().map(|&x| first.conjugate(g, x)).collect();
            orbit.sort();
            orbit.dedup();
            remaining.retain(|mu| !orbit.contains(mu));
            let mu = match self.options.representative {
                RepresentativeChoice::Least => orbit.swap_remove(0),
                RepresentativeChoice::Last => orbit.pop().expect("orbit is non-empty"),
            };
            let stabilizer: Vec<Elem> = u.elements().iter().copied().filter(|&x| mu.conjugate(g, x) == mu).collect();
            let mut gens = stabilizer.clone();
            gens.extend_from_slice(layer.elements());
            let top = g.generated(&gens);
            let extended = trivial_extension(g, &top, &layer, &stabilizer, &mu)?;
            acc = acc.mul(&self.delta.value(&extended)?).mul(&self.level(ambient, &layer, &top)?);
        }
        Ok(acc)
    }
}

/// μ' on U_μ·C with μ'(uc) = μ(c), for μ on the normal subgroup C.
fn trivial_extension(
    g: &Group,
    top: &Subgroup,
    layer: &Subgroup,
    stab: &[Elem],
    mu: &Character,
) -> Result<Character, ExtendError> {
    // x = u·c with u ∈ U_μ; μ(u⁻¹x) does not depend on u since μ is trivial on U ∩ C
    let value = |x: Elem| -> RootOfUnity {
        let c = stab
            .iter()
            .map(|&s| g.mul(g.inv(s), x))
            .find(|&c| layer.contains(c))
            .expect("top = stabilizer · layer");
        mu.value(c)
    };
    Ok(Character::from_fn(g, top, value)?)
}

/// Which λ identity a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaProperty {
    /// λ conjugation invariance.
    Conjugation,
    /// λ_{U'}^A = λ_{U'}^U · (λ_U^A)^{(U:U')}.
    Tower,
    /// λ_U^A computed over N equals the one computed over a normal M ≤ U.
    Inflation,
    /// λ_U^A = ∏_{χ ∈ (A/U)*} Δ(A, χ) for A/U abelian.
    AbelianProduct,
    /// Recomputation with other orbit representatives.
    Representatives,
    /// Recomputation with another minimal abelian normal layer.
    LayerChoice,
    /// Memoized and fresh runs.
    Memo,
}

impl fmt::Display for LambdaProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LambdaProperty::Conjugation => "conjugation",
            LambdaProperty::Tower => "tower",
            LambdaProperty::Inflation => "inflation",
            LambdaProperty::AbelianProduct => "abelian-product",
            LambdaProperty::Representatives => "representatives",
            LambdaProperty::LayerChoice => "layer-choice",
            LambdaProperty::Memo => "memo",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct LambdaViolation<A> {
    pub property: LambdaProperty,
    pub description: String,
    pub left: A,
    pub right: A,
}

fn subgroups_over(g: &Group, n: &Subgroup) -> Vec<Subgroup> {
    g.subgroups().iter().filter(|s| n.is_subgroup_of(s)).cloned().collect()
}

fn describe(name: &str, parts: &[&Subgroup]) -> String {
    let items: Vec<String> = parts.iter().map(|s| format!("{:?}", s.elements())).collect();
    format!("{name} {}", items.join(" "))
}

fn collect<A: ValueGroup>(
    per: Vec<Result<Vec<LambdaViolation<A>>, ExtendError>>,
) -> Result<Vec<LambdaViolation<A>>, ExtendError> {
    Ok(per.into_iter().collect::<Result<Vec<_>, _>>()?.into_iter().flatten().collect())
}

impl<A: ValueGroup> LambdaEngine<'_, A> {
    /// λ_{U^x}^A = λ_U^A for x ∈ A, over all N ≤ U ≤ A ≤ Ω.
    pub fn check_conjugation(&self) -> Result<Vec<LambdaViolation<A>>, ExtendError> {
        let g = self.group();
        let subs = subgroups_over(g, self.delta.lower());
        let per = exec::map(self.options.strategy, &subs, |a| {
            let mut out = Vec::new();
            for u in subs.iter().filter(|u| u.is_subgroup_of(a)) {
                let base = self.lambda_in(a, u)?;
                for &x in a.elements() {
                    let conj = g.conjugate_subgroup(u, x);
                    let other = self.lambda_in(a, &conj)?;
                    if other != base {
                        out.push(LambdaViolation {
                            property: LambdaProperty::Conjugation,
                            description: describe(&format!("by {x}"), &[a, u]),
                            left: base.clone(),
                            right: other,
                        });
                        break;
                    }
                }
            }
            Ok(out)
        });
        collect(per)
    }

    /// λ_{U'}^A = λ_{U'}^U · (λ_U^A)^{(U:U')} for all N ≤ U' ≤ U ≤ A ≤ Ω,
    /// each side computed directly in its own ambient.
    pub fn verify_tower(&self) -> Result<Vec<LambdaViolation<A>>, ExtendError> {
        let subs = subgroups_over(self.group(), self.delta.lower());
        let per = exec::map(self.options.strategy, &subs, |a| {
            let mut out = Vec::new();
            for u in subs.iter().filter(|u| u.is_subgroup_of(a)) {
                let upper = self.lambda_in(a, u)?;
                for v in subs.iter().filter(|v| v.is_subgroup_of(u)) {
                    let left = self.lambda_in(a, v)?;
                    let index = (u.order() / v.order()) as i64;
                    let right = self.lambda_in(u, v)?.mul(&upper.pow(index));
                    if left != right {
                        out.push(LambdaViolation {
                            property: LambdaProperty::Tower,
                            description: describe("chain", &[a, u, v]),
                            left,
                            right,
                        });
                    }
                }
            }
            Ok(out)
        });
        collect(per)
    }

    /// λ_U^A over N equals λ_{U/M}^{A/M} for every M ⊴ A with N ≤ M ≤ U.
    pub fn check_inflation(&self) -> Result<Vec<LambdaViolation<A>>, ExtendError> {
        let g = self.group();
        let n = self.delta.lower();
        let subs = subgroups_over(g, n);
        let per = exec::map(self.options.strategy, &subs, |a| {
            let mut out = Vec::new();
            let normals: Vec<&Subgroup> = subs.iter().filter(|m| m.is_subgroup_of(a) && g.is_normal_in(m, a)).collect();
            for u in subs.iter().filter(|u| u.is_subgroup_of(a)) {
                let base = self.lambda_in(a, u)?;
                for m in normals.iter().filter(|m| m.is_subgroup_of(u)) {
                    let other = self.lambda_over(a, m, u)?;
                    if other != base {
                        out.push(LambdaViolation {
                            property: LambdaProperty::Inflation,
                            description: describe("ambient, subgroup, level", &[a, u, m]),
                            left: base.clone(),
                            right: other,
                        });
                    }
                }
            }
            Ok(out)
        });
        collect(per)
    }

    /// λ_U^A = ∏_{χ ∈ (A/U)*} Δ(A, χ) whenever U ⊴ A with A/U abelian.
    pub fn check_abelian_quotients(&self) -> Result<Vec<LambdaViolation<A>>, ExtendError> {
        let g = self.group();
        let subs = subgroups_over(g, self.delta.lower());
        let per = exec::map(self.options.strategy, &subs, |a| {
            let mut out = Vec::new();
            let derived = g.derived_subgroup(a);
            for u in subs.iter().filter(|u| u.is_subgroup_of(a) && g.is_normal_in(u, a) && derived.is_subgroup_of(u)) {
                let left = self.lambda_in(a, u)?;
                let mut right = A::one();
                for chi in characters_of(g, a).iter().filter(|chi| chi.is_trivial_on(u)) {
                    right = right.mul(&self.delta.value(chi)?);
                }
                if left != right {
                    out.push(LambdaViolation {
                        property: LambdaProperty::AbelianProduct,
                        description: describe("pair", &[a, u]),
                        left,
                        right,
                    });
                }
            }
            Ok(out)
        });
        collect(per)
    }

    /// Compare every λ_U^A against an engine with different options.
    pub fn compare_with(&self, other: &LambdaEngine<'_, A>, property: LambdaProperty) -> Result<Vec<LambdaViolation<A>>, ExtendError> {
        let subs = subgroups_over(self.group(), self.delta.lower());
        let per = exec::map(self.options.strategy, &subs, |a| {
            let mut out = Vec::new();
            for u in subs.iter().filter(|u| u.is_subgroup_of(a)) {
                let left = self.lambda_in(a, u)?;
                let right = other.lambda_in(a, u)?;
                if left != right {
                    out.push(LambdaViolation { property, description: describe("pair", &[a, u]), left, right });
                }
            }
            Ok(out)
        });
        collect(per)
    }

    /// Every λ identity: conjugation, tower, inflation, abelian quotients,
    /// and independence of representatives, layer choice and memo.
    pub fn verify_all(&self) -> Result<Vec<LambdaViolation<A>>, ExtendError> {
        let mut out = self.check_conjugation()?;
        out.extend(self.verify_tower()?);
        out.extend(self.check_inflation()?);
        out.extend(self.check_abelian_quotients()?);
        let base = self.options;
        let reps = LambdaEngine::with_options(self.delta, LambdaOptions { representative: RepresentativeChoice::Last, ..base });
        out.extend(self.compare_with(&reps, LambdaProperty::Representatives)?);
        let widest = self.group().minimal_normal_subgroups().len().max(1);
        for k in 1..widest.max(2) {
            let rotated = LambdaEngine::with_options(self.delta, LambdaOptions { layer: LayerChoice::Rotate(k), ..base });
            out.extend(self.compare_with(&rotated, LambdaProperty::LayerChoice)?);
        }
        let fresh = LambdaEngine::with_options(self.delta, LambdaOptions { memo: !base.memo, ..base });
        out.extend(self.compare_with(&fresh, LambdaProperty::Memo)?);
        Ok(out)
    }

    /// λ_U^H = λ_U^Ω · (λ_H^Ω)^{−(H:U)} for all N ≤ U ≤ H ≤ Ω.
    pub fn table(&self) -> Result<LambdaTable<A>, ExtendError> {
        let subs = subgroups_over(self.group(), self.delta.lower());
        let mut entries = Vec::new();
        for h in &subs {
            for u in subs.iter().filter(|u| u.is_subgroup_of(h)) {
                entries.push((u.clone(), h.clone(), self.relative(u, h)?));
            }
        }
        Ok(LambdaTable { entries })
    }
}

/// λ_U^H for all N ≤ U ≤ H ≤ Ω, derived from λ_·^Ω.
#[derive(Clone, Debug)]
pub struct LambdaTable<A> {
    entries: Vec<(Subgroup, Subgroup, A)>,
}

impl<A: ValueGroup> LambdaTable<A> {
    pub fn get(&self, u: &Subgroup, h: &Subgroup) -> Option<&A> {
        self.entries.iter().find(|(a, b, _)| a == u && b == h).map(|(_, _, v)| v)
    }

    pub fn entries(&self) -> &[(Subgroup, Subgroup, A)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
