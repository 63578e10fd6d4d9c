use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use char_core::{induce, Character, ClassFunction};
use group_core::{Elem, Embedding, Group, QuotientMap, Subgroup};

use crate::error::BrauerError;
use crate::pair::{pair_class, PairClass};

/// An element of R₊(N≤Ω): a finitely supported integer combination of pair
/// classes [H, χ] with every H ⊇ N.
#[derive(Clone)]
pub struct RPlusElement {
    group: Group,
    lower: Subgroup,
    coeffs: BTreeMap<PairClass, i64>,
}

impl RPlusElement {
    /// The zero element of R₊(≤Ω).
    pub fn zero(group: &Group) -> RPlusElement {
        RPlusElement { group: group.clone(), lower: group.trivial(), coeffs: BTreeMap::new() }
    }

    /// The zero element of R₊(N≤Ω).
    pub fn zero_over(group: &Group, lower: &Subgroup) -> Result<RPlusElement, BrauerError> {
        if !group.is_normal(lower) {
            return Err(BrauerError::NotNormal);
        }
        Ok(RPlusElement { group: group.clone(), lower: lower.clone(), coeffs: BTreeMap::new() })
    }

    /// The generator [H, χ].
    pub fn generator(group: &Group, chi: &Character) -> RPlusElement {
        let mut x = RPlusElement::zero(group);
        x.coeffs.insert(pair_class(group, chi), 1);
        x
    }

    pub fn from_terms(
        group: &Group,
        lower: &Subgroup,
        terms: impl IntoIterator<Item = (PairClass, i64)>,
    ) -> Result<RPlusElement, BrauerError> {
        let mut x = RPlusElement::zero_over(group, lower)?;
        for (class, n) in terms {
            x.add_term(class, n)?;
        }
        Ok(x)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn lower(&self) -> &Subgroup {
        &self.lower
    }

    /// Re-declare the lower bound; every H in the support must contain it.
    pub fn with_lower(&self, lower: &Subgroup) -> Result<RPlusElement, BrauerError> {
        let mut x = RPlusElement::zero_over(&self.group, lower)?;
        for (class, &n) in &self.coeffs {
            x.add_term(class.clone(), n)?;
        }
        Ok(x)
    }

    /// Add `n·class`; the class must be canonical for this group.
    pub fn add_term(&mut self, class: PairClass, n: i64) -> Result<(), BrauerError> {
        if !self.lower.is_subgroup_of(class.subgroup()) {
            return Err(BrauerError::BelowLowerBound);
        }
        if n == 0 {
            return Ok(());
        }
        match self.coeffs.entry(class) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += n;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(n);
            }
        }
        Ok(())
    }

    /// Add `n·[H, χ]` for an arbitrary representative.
    pub fn add_pair(&mut self, chi: &Character, n: i64) -> Result<(), BrauerError> {
        let class = pair_class(&self.group, chi);
        self.add_term(class, n)
    }

    pub fn coefficient(&self, class: &PairClass) -> i64 {
        self.coeffs.get(class).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PairClass, i64)> {
        self.coeffs.iter().map(|(k, &v)| (k, v))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn combine(&self, other: &RPlusElement, sign: i64) -> RPlusElement {
        assert!(self.group == other.group, "elements over different groups");
        let lower = self.lower.intersection(&other.lower);
        let mut x = RPlusElement { group: self.group.clone(), lower, coeffs: self.coeffs.clone() };
        for (class, &n) in &other.coeffs {
            x.add_term(class.clone(), sign * n).expect("lower bound of a sum is the meet");
        }
        x
    }

    pub fn add(&self, other: &RPlusElement) -> RPlusElement {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &RPlusElement) -> RPlusElement {
        self.combine(other, -1)
    }

    pub fn neg(&self) -> RPlusElement {
        self.scale(-1)
    }

    pub fn scale(&self, n: i64) -> RPlusElement {
        let coeffs = if n == 0 { BTreeMap::new() } else { self.coeffs.iter().map(|(k, &v)| (k.clone(), v * n)).collect() };
        RPlusElement { group: self.group.clone(), lower: self.lower.clone(), coeffs }
    }

    /// The character twist (Ω, η)·x = Σ n [H, η_H χ].
    pub fn twist(&self, eta: &Character) -> RPlusElement {
        assert_eq!(eta.domain().order(), self.group.order(), "twist by a character of Ω");
        let mut out = RPlusElement { group: self.group.clone(), lower: self.lower.clone(), coeffs: BTreeMap::new() };
        for (class, &n) in &self.coeffs {
            let chi = class.character();
            let twisted = eta.restrict(&self.group, chi.domain()).mul(chi);
            out.add_pair(&twisted, n).expect("twisting keeps the subgroup");
        }
        out
    }

    /// Serialised form: a header naming the group and N, then one line per
    /// term `n * [H-elements | character-exponents]`.
    pub fn to_text(&self) -> String {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let mut out = format!(
            "group {} order {}\nlower {}\n",
            self.group.name().unwrap_or("unnamed"),
            self.group.order(),
            join(self.lower.elements())
        );
        for (class, n) in self.terms() {
            let exps: Vec<usize> = class.character().exponents().iter().map(|&k| k as usize).collect();
            out.push_str(&format!("{n} * [{} | {}]\n", join(class.subgroup().elements()), join(&exps)));
        }
        out
    }

    /// Parse [`RPlusElement::to_text`] output against the given group.
    pub fn parse(text: &str, group: &Group) -> Result<RPlusElement, BrauerError> {
        let bad = |m: &str| BrauerError::Parse(m.to_string());
        let nums = |s: &str| -> Result<Vec<usize>, BrauerError> {
            s.split_whitespace().map(|t| t.parse().map_err(|_| bad(&format!("bad number `{t}`")))).collect()
        };
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| bad("missing header"))?;
        let order: usize = header
            .split_whitespace()
            .skip_while(|&w| w != "order")
            .nth(1)
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| bad("header must be `group <name> order <n>`"))?;
        if !header.starts_with("group ") || order != group.order() {
            return Err(bad("header does not match the group"));
        }
        let lower_line = lines.next().and_then(|l| l.strip_prefix("lower")).ok_or_else(|| bad("missing `lower` line"))?;
        let lower = group.subgroup(&nums(lower_line)?)?;
        let mut x = RPlusElement::zero_over(group, &lower)?;
        for line in lines {
            let (n, rest) = line.split_once('*').ok_or_else(|| bad(line))?;
            let n: i64 = n.trim().parse().map_err(|_| bad(line))?;
            let inner = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(|| bad(line))?;
            let (h, e) = inner.split_once('|').ok_or_else(|| bad(line))?;
            let h = group.subgroup(&nums(h)?)?;
            let exps: Vec<u32> = nums(e)?.into_iter().map(|k| k as u32).collect();
            let chi = Character::from_exponents(group, &h, exps)?;
            x.add_pair(&chi, n)?;
        }
        Ok(x)
    }
}

impl PartialEq for RPlusElement {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.coeffs == other.coeffs
    }
}

impl Eq for RPlusElement {}

impl fmt::Debug for RPlusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(k, n)| format!("{n}·{k:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// φ(x) = Σ n Ind_H^Ω(χ).
pub fn brauer_map(x: &RPlusElement) -> ClassFunction {
    let g = &x.group;
    x.terms().fold(ClassFunction::zero(g), |acc, (class, n)| {
        acc.add(&induce(class.character(), g).expect("pair lives in the group").scale(n))
    })
}

/// Least representatives of the double cosets A x B.
pub fn double_coset_reps(g: &Group, a: &Subgroup, b: &Subgroup) -> Vec<Elem> {
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        reps.push(x);
        for &p in a.elements() {
            let px = g.mul(p, x);
            for &q in b.elements() {
                seen[g.mul(px, q)] = true;
            }
        }
    }
    reps
}

/// Σ_{x ∈ H₁\Ω/H₂} [H₁^x ∩ H₂, (χ₁^x)·χ₂] for one pair of generators.
fn mackey_terms(g: &Group, chi1: &Character, chi2: &Character) -> Vec<Character> {
    double_coset_reps(g, chi1.domain(), chi2.domain())
        .into_iter()
        .map(|x| {
            let c = chi1.conjugate(g, x);
            let meet = c.domain().intersection(chi2.domain());
            c.restrict(g, &meet).mul(&chi2.restrict(g, &meet))
        })
        .collect()
}

/// The ring product, bilinear in the Mackey product of generators.
pub fn multiply(x: &RPlusElement, y: &RPlusElement) -> RPlusElement {
    assert!(x.group == y.group, "elements over different groups");
    let g = &x.group;
    let mut out = RPlusElement::zero_over(g, &x.lower.intersection(&y.lower)).expect("meet of normal subgroups");
    for (a, m) in x.terms() {
        for (b, n) in y.terms() {
            for chi in mackey_terms(g, a.character(), b.character()) {
                out.add_pair(&chi, m * n).expect("Mackey terms contain both lower bounds");
            }
        }
    }
    out
}

/// Ind_B^Ω: enlarge classes from the embedded group of `emb` to its parent.
pub fn induce_element(x: &RPlusElement, emb: &Embedding) -> RPlusElement {
    assert!(emb.kernel().is_trivial() && *emb.group() == x.group, "induction needs the embedded group");
    let parent = emb.parent();
    let lifted_lower = emb.preimage(&x.lower);
    let mut out = RPlusElement::zero_over(parent, &parent.core(&lifted_lower)).expect("cores are normal");
    for (class, n) in x.terms() {
        let chi = class.character().relabel(emb.preimage(class.subgroup()));
        out.add_pair(&chi, n).expect("core lies below the lifted subgroups");
    }
    out
}

/// Res_B: restriction from Ω to the embedded subgroup of `emb` (Mackey).
pub fn restrict_element(x: &RPlusElement, emb: &Embedding) -> RPlusElement {
    assert!(emb.kernel().is_trivial() && *emb.parent() == x.group, "restriction needs an embedding of a subgroup");
    let g = &x.group;
    let b = emb.top();
    let local = emb.group();
    let lower = emb.image(&x.lower.intersection(b));
    let mut out = RPlusElement::zero_over(local, &lower).expect("N ∩ B is normal in B");
    let trivial_b = Character::trivial(g, b);
    for (class, n) in x.terms() {
        for chi in mackey_terms(g, class.character(), &trivial_b) {
            let image = emb.image(chi.domain());
            out.add_pair(&chi.relabel(image), n).expect("restricted pairs contain N ∩ B");
        }
    }
    out
}

/// Inflation along u: Ω → Ω̄: [H̄, χ̄] ↦ [u⁻¹(H̄), χ̄∘u].
pub fn inflate_element(x: &RPlusElement, quotient: &QuotientMap) -> RPlusElement {
    assert!(*quotient.group() == x.group, "inflation needs the quotient group");
    let parent = quotient.parent();
    let lower = quotient.preimage(&x.lower);
    let mut out = RPlusElement::zero_over(parent, &lower).expect("preimages of normal subgroups are normal");
    for (class, n) in x.terms() {
        let chi = inflate_character(quotient, class.character());
        out.add_pair(&chi, n).expect("preimages contain the lifted lower bound");
    }
    out
}

pub fn inflate_character(quotient: &QuotientMap, chi: &Character) -> Character {
    let parent = quotient.parent();
    let h = quotient.preimage(chi.domain());
    Character::from_fn(parent, &h, |y| chi.value(quotient.project(y))).expect("inflation of a character")
}

/// The inverse of inflation on classes that live modulo the kernel.
pub fn deflate_element(x: &RPlusElement, quotient: &QuotientMap) -> Result<RPlusElement, BrauerError> {
    assert!(*quotient.parent() == x.group, "deflation needs a quotient of the group");
    let local = quotient.group();
    let lower = quotient.image(&x.lower);
    let mut out = RPlusElement::zero_over(local, &lower)?;
    for (class, n) in x.terms() {
        out.add_pair(&deflate_character(quotient, class.character()).ok_or(BrauerError::NotInQuotient)?, n)?;
    }
    Ok(out)
}

/// χ̄ with χ = χ̄∘u, if χ is defined modulo the kernel.
pub fn deflate_character(quotient: &QuotientMap, chi: &Character) -> Option<Character> {
    let kernel = quotient.kernel();
    if !kernel.is_subgroup_of(chi.domain()) || !chi.is_trivial_on(kernel) {
        return None;
    }
    let image = quotient.image(chi.domain());
    Character::from_fn(quotient.group(), &image, |q| chi.value(quotient.lift(q))).ok()
}
