//! Type-III groups: G with a maximal subgroup H whose core is trivial.  Such
//! a G is a semidirect product H ⋉ C with C the unique minimal normal
//! subgroup, elementary abelian and self-centralizing.  For a maximal
//! non-normal H of an arbitrary G the same holds for G/core(H).

use group_core::{Elem, Group, GroupError, QuotientMap, Subgroup};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Type3Error {
    #[error("group is not solvable")]
    NotSolvable,
    #[error("subgroup is not maximal")]
    NotMaximal,
    #[error("subgroup is normal")]
    HNormal,
    #[error("degenerate certificate (C = G of prime order) has no complements to count")]
    Degenerate,
    #[error("C must be an abelian subgroup normalized by H")]
    BadAction,
    #[error("cocycle search needs {candidates} candidates, above the cap {cap}")]
    TooLarge { candidates: u128, cap: u128 },
    #[error("structure check failed: {0}")]
    LemmaViolation(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A certified type-III situation (G, H) with K = core(H) and C ⊴ G such
/// that HC = G, H ∩ C = K and C/K is an elementary abelian ℓ-group.
#[derive(Clone, Debug)]
pub struct TypeIIICertificate {
    group: Group,
    subgroup: Subgroup,
    core: Subgroup,
    complement: Subgroup,
    prime: usize,
    degenerate: bool,
}

impl TypeIIICertificate {
    pub fn group(&self) -> &Group {
        &self.group
    }

    /// H
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// K = ⋂ gHg⁻¹
    pub fn core(&self) -> &Subgroup {
        &self.core
    }

    /// C, normal in G, containing K.
    pub fn complement(&self) -> &Subgroup {
        &self.complement
    }

    /// ℓ with (G:H) = #(C/K) a power of ℓ.
    pub fn prime(&self) -> usize {
        self.prime
    }

    /// H = K and G/K cyclic of prime order.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// G → G/K
    pub fn quotient(&self) -> QuotientMap {
        self.group.quotient(&self.core).expect("cores are normal")
    }
}

fn prime_power_base(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

fn violation(msg: &str) -> Type3Error {
    Type3Error::LemmaViolation(msg.to_string())
}

/// Certify (G, H), or refuse.
pub fn is_type_iii(g: &Group, h: &Subgroup) -> Result<TypeIIICertificate, Type3Error> {
    if !g.is_solvable() {
        return Err(Type3Error::NotSolvable);
    }
    if !g.maximal_subgroups_of(&g.whole()).contains(h) {
        return Err(Type3Error::NotMaximal);
    }
    if g.is_normal(h) {
        // maximal normal means prime index; only H = {e} is accepted
        if !h.is_trivial() {
            return Err(Type3Error::HNormal);
        }
        let p = prime_power_base(g.order()).filter(|&p| p == g.order()).ok_or_else(|| violation("G/K not of prime order"))?;
        return Ok(TypeIIICertificate {
            group: g.clone(),
            subgroup: h.clone(),
            core: h.clone(),
            complement: g.whole(),
            prime: p,
            degenerate: true,
        });
    }
    let core = g.core(h);
    let q = g.quotient(&core)?;
    let bar = q.group();
    let hbar = q.image(h);
    let minimal = bar.minimal_normal_subgroups();
    if minimal.len() != 1 {
        return Err(violation("G/K must have a unique minimal normal subgroup"));
    }
    let cbar = &minimal[0];
    let prime = prime_power_base(cbar.order()).ok_or_else(|| violation("C/K is not an ℓ-group"))?;
    let elementary = cbar.elements().iter().all(|&x| x == 0 || bar.element_order(x) == prime);
    if !bar.subgroup_is_abelian(cbar) || !elementary {
        return Err(violation("C/K is not elementary abelian"));
    }
    if bar.fitting_subgroup() != *cbar {
        return Err(violation("C/K is not the Fitting subgroup of G/K"));
    }
    if bar.centralizer(cbar) != *cbar {
        return Err(violation("C/K is not self-centralizing"));
    }
    if !bar.centralizer_in(cbar, &hbar).is_trivial() {
        return Err(violation("H/K does not act faithfully on C/K"));
    }
    if bar.join(&hbar, cbar).order() != bar.order() || !hbar.intersection(cbar).is_trivial() {
        return Err(violation("H/K is not a complement of C/K"));
    }
    let complement = q.preimage(cbar);
    if h.index_in(&g.whole()) != cbar.order() {
        return Err(violation("(G:H) differs from #C/K"));
    }
    Ok(TypeIIICertificate { group: g.clone(), subgroup: h.clone(), core, complement, prime, degenerate: false })
}

/// Every maximal subgroup of G with its certificate or refusal.
pub fn scan(g: &Group) -> Vec<(Subgroup, Result<TypeIIICertificate, Type3Error>)> {
    g.maximal_subgroups_of(&g.whole()).into_iter().map(|h| {
        let r = is_type_iii(g, &h);
        (h, r)
    }).collect()
}

/// Complements of C/K in G/K with trivial core, listed by their preimages in G.
#[derive(Clone, Debug)]
pub struct ComplementsCensus {
    pub complements: Vec<Subgroup>,
    /// Every complement is H^c for some c ∈ C.
    pub all_c_conjugate: bool,
    /// The number of complements equals #(C/K), i.e. the C-conjugates are distinct.
    pub count_equals_order_c: bool,
}

pub fn complements_census(cert: &TypeIIICertificate) -> Result<ComplementsCensus, Type3Error> {
    if cert.degenerate {
        return Err(Type3Error::Degenerate);
    }
    let q = cert.quotient();
    let bar = q.group();
    let cbar = q.image(&cert.complement);
    let hbar = q.image(&cert.subgroup);
    let complements: Vec<Subgroup> = bar
        .subgroups()
        .iter()
        .filter(|x| {
            x.intersection(&cbar).is_trivial() && x.order() * cbar.order() == bar.order() && bar.core(x).is_trivial()
        })
        .cloned()
        .collect();
    let conjugates: Vec<Subgroup> = cbar.elements().iter().map(|&c| bar.conjugate_subgroup(&hbar, c)).collect();
    let all_c_conjugate = complements.iter().all(|x| conjugates.contains(x));
    let mut distinct = conjugates.clone();
    distinct.sort();
    distinct.dedup();
    let count_equals_order_c = complements.len() == cbar.order() && distinct.len() == cbar.order();
    Ok(ComplementsCensus {
        complements: complements.iter().map(|x| q.preimage(x)).collect(),
        all_c_conjugate,
        count_equals_order_c,
    })
}

/// The orders of Z¹(H, C) and B¹(H, C) for H acting on an abelian C by
/// conjugation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomologyCount {
    pub cocycles: usize,
    pub coboundaries: usize,
}

impl CohomologyCount {
    pub fn is_trivial(&self) -> bool {
        self.cocycles == self.coboundaries
    }
}

/// Cocycle search is over generator images: #C^#gens candidates.
pub const DEFAULT_COCYCLE_CAP: u128 = 1 << 22;

pub fn h1_count(g: &Group, h: &Subgroup, c: &Subgroup, cap: u128) -> Result<CohomologyCount, Type3Error> {
    if !g.subgroup_is_abelian(c) || h.elements().iter().any(|&x| c.elements().iter().any(|&y| !c.contains(g.conj(x, y)))) {
        return Err(Type3Error::BadAction);
    }
    let gens = g.generators_of(h);
    let candidates = (c.order() as u128).checked_pow(gens.len() as u32).unwrap_or(u128::MAX);
    if candidates > cap {
        return Err(Type3Error::TooLarge { candidates, cap });
    }
    let act = |x: Elem, y: Elem| g.conj(x, y);
    let mut cocycles = 0;
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<Elem> = choice.iter().map(|&i| c.elements()[i]).collect();
        if extend_cocycle(g, h, &gens, &images, act).is_some() {
            cocycles += 1;
        }
        // next tuple
        let mut k = 0;
        while k < choice.len() {
            choice[k] += 1;
            if choice[k] < c.order() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
    }
    let mut boundaries: Vec<Vec<Elem>> = c
        .elements()
        .iter()
        .map(|&z| h.elements().iter().map(|&x| g.mul(act(x, z), g.inv(z))).collect())
        .collect();
    boundaries.sort();
    boundaries.dedup();
    Ok(CohomologyCount { cocycles, coboundaries: boundaries.len() })
}

/// Whether H¹(H, C) = 1.
pub fn h1_trivial(g: &Group, h: &Subgroup, c: &Subgroup) -> Result<bool, Type3Error> {
    h1_count(g, h, c, DEFAULT_COCYCLE_CAP).map(|n| n.is_trivial())
}

/// The cocycle f with f(gens[i]) = images[i], if it exists.  Values are
/// propagated by f(x s) = f(x) · x f(s) x⁻¹ and then checked on all pairs.
fn extend_cocycle(
    g: &Group,
    h: &Subgroup,
    gens: &[Elem],
    images: &[Elem],
    act: impl Fn(Elem, Elem) -> Elem,
) -> Option<Vec<Option<Elem>>> {
    let mut f: Vec<Option<Elem>> = vec![None; g.order()];
    f[0] = Some(0);
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        let fx = f[x].expect("queued elements have values");
        for (&s, &fs) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let value = g.mul(fx, act(x, fs));
            match f[y] {
                None => {
                    f[y] = Some(value);
                    queue.push(y);
                }
                Some(v) if v != value => return None,
                Some(_) => {}
            }
        }
    }
    let e = h.elements();
    for &a in e {
        for &b in e {
            let lhs = f[g.mul(a, b)]?;
            let rhs = g.mul(f[a]?, act(a, f[b]?));
            if lhs != rhs {
                return None;
            }
        }
    }
    Some(f)
}

/// H¹(H/K, C/K) for a certificate, computed inside G/K.
pub fn certificate_h1(cert: &TypeIIICertificate) -> Result<CohomologyCount, Type3Error> {
    let q = cert.quotient();
    h1_count(q.group(), &q.image(&cert.subgroup), &q.image(&cert.complement), DEFAULT_COCYCLE_CAP)
}
