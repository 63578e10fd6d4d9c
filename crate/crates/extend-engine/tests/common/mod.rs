#![allow(dead_code)]

use char_core::{Character, RootOfUnity};
use extend_engine::{DeltaFunction, FreeAbelian, ValueGroup};
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

pub fn s() -> FreeAbelian {
    FreeAbelian::symbol("s")
}

/// Δ(H, χ) = s for χ ≠ 1; extends to ℱ(H, ρ) = s^{dim ρ − ⟨ρ, 1⟩}.
pub fn free_oracle(g: &Group, n: &Subgroup) -> DeltaFunction<FreeAbelian> {
    DeltaFunction::from_fn(g, n, |chi| if chi.is_trivial() { FreeAbelian::one() } else { s() }).unwrap()
}

/// A distinct free symbol on every class with χ ≠ 1.
pub fn generic_symbols(g: &Group, n: &Subgroup) -> DeltaFunction<FreeAbelian> {
    let mut delta = DeltaFunction::partial(g, n).unwrap();
    for (i, class) in delta.classes().to_vec().iter().enumerate() {
        let chi = class.character();
        if !chi.is_trivial() {
            delta.set(chi, FreeAbelian::symbol(&format!("d{i}"))).unwrap();
        }
    }
    delta
}

/// Roots of unity under multiplication.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Root(pub RootOfUnity);

impl ValueGroup for Root {
    fn one() -> Self {
        Root(RootOfUnity::new(0, 1))
    }
    fn mul(&self, other: &Self) -> Self {
        Root(self.0.mul(&other.0))
    }
    fn inv(&self) -> Self {
        Root(self.0.inv())
    }
    fn to_text(&self) -> String {
        let (k, m) = self.0.fraction();
        format!("{k}/{m}")
    }
    fn parse_text(text: &str) -> Result<Self, String> {
        let (k, m) = text.trim().split_once('/').ok_or("expected k/m")?;
        let k: i64 = k.parse().map_err(|_| "bad numerator")?;
        let m: u64 = m.parse().map_err(|_| "bad denominator")?;
        Ok(Root(RootOfUnity::new(k, m)))
    }
}

/// Elements h_t = t·x·t'⁻¹ ∈ H over a right transversal of H in Ω; their
/// product is the transfer Ω → H^{ab} at x.
pub fn transfer_factors(g: &Group, h: &Subgroup, x: Elem) -> Vec<Elem> {
    let coset = |y: Elem| -> Elem { h.elements().iter().map(|&k| g.mul(k, y)).min().unwrap() };
    let mut reps: Vec<Elem> = g.elements().map(coset).collect();
    reps.sort_unstable();
    reps.dedup();
    reps.iter()
        .map(|&t| {
            let y = g.mul(t, x);
            g.mul(y, g.inv(coset(y)))
        })
        .collect()
}

/// Δ(H, χ) = χ(V_{Ω→H}(x)); extends to ℱ(H, ρ) = det ρ(V_{Ω→H}(x)).
pub fn transfer_oracle(g: &Group, n: &Subgroup, x: Elem) -> DeltaFunction<Root> {
    DeltaFunction::from_fn(g, n, |chi: &Character| {
        transfer_factors(g, chi.domain(), x).iter().fold(Root::one(), |acc, &h| acc.mul(&Root(chi.value(h))))
    })
    .unwrap()
}

/// Sign of y acting on the left cosets of U in A.
pub fn coset_sign(g: &Group, a: &Subgroup, u: &Subgroup, y: Elem) -> i64 {
    let coset = |z: Elem| -> Elem { u.elements().iter().map(|&k| g.mul(z, k)).min().unwrap() };
    let mut cosets: Vec<Elem> = a.elements().iter().map(|&z| coset(z)).collect();
    cosets.sort_unstable();
    cosets.dedup();
    let mut seen = vec![false; cosets.len()];
    let mut cycles = 0;
    for i in 0..cosets.len() {
        if seen[i] {
            continue;
        }
        cycles += 1;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            let next = coset(g.mul(y, cosets[j]));
            j = cosets.iter().position(|&c| c == next).unwrap();
        }
    }
    if (cosets.len() - cycles).is_multiple_of(2) { 1 } else { -1 }
}

/// λ_U^A for the transfer oracle: det Ind_U^A(1) at V_{Ω→A}(x).
pub fn transfer_lambda(g: &Group, a: &Subgroup, u: &Subgroup, x: Elem) -> Root {
    let v = transfer_factors(g, a, x).into_iter().fold(0, |acc, h| g.mul(acc, h));
    Root(RootOfUnity::new(if coset_sign(g, a, u, v) == 1 { 0 } else { 1 }, 2))
}

pub fn subgroups_over(g: &Group, n: &Subgroup) -> Vec<Subgroup> {
    g.subgroups().iter().filter(|u| n.is_subgroup_of(u)).cloned().collect()
}
