use std::fmt;

use group_core::{Elem, Group, Subgroup};
use num_integer::Integer;

use crate::cyclotomic::Cyclotomic;
use crate::error::CharError;
use crate::root::RootOfUnity;

/// A linear character χ: H → μ_m, stored as exponents with χ(x) = ζ_m^k.
///
/// `m` is the exponent of H/[H,H] and `exps[i]` belongs to the i-th element
/// of the sorted element list of H, so equal characters are equal structs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    domain: Subgroup,
    modulus: u32,
    exps: Vec<u32>,
}

/// Exponent of H/[H,H].
pub fn abelianization_exponent(g: &Group, h: &Subgroup) -> u32 {
    let d = g.derived_subgroup(h);
    h.elements().iter().fold(1u32, |acc, &x| {
        let mut y = x;
        let mut k = 1u32;
        while !d.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        acc.lcm(&k)
    })
}

impl Character {
    pub fn trivial(g: &Group, domain: &Subgroup) -> Character {
        Character {
            domain: domain.clone(),
            modulus: abelianization_exponent(g, domain),
            exps: vec![0; domain.order()],
        }
    }

    /// Build from a value function; checks that it is a homomorphism.
    pub fn from_fn(
        g: &Group,
        domain: &Subgroup,
        value: impl Fn(Elem) -> RootOfUnity,
    ) -> Result<Character, CharError> {
        let m = abelianization_exponent(g, domain);
        let exps = domain
            .elements()
            .iter()
            .map(|&x| {
                value(x)
                    .exponent_for(m as u64)
                    .map(|k| k as u32)
                    .ok_or_else(|| CharError::NotACharacter(format!("value at {x} has order not dividing {m}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let chi = Character { domain: domain.clone(), modulus: m, exps };
        chi.check_homomorphism(g)?;
        Ok(chi)
    }

    /// Build from exponents relative to ζ_m with the canonical m.
    pub fn from_exponents(g: &Group, domain: &Subgroup, exps: Vec<u32>) -> Result<Character, CharError> {
        let m = abelianization_exponent(g, domain);
        if exps.len() != domain.order() || exps.iter().any(|&k| k >= m) {
            return Err(CharError::NotACharacter("exponent vector does not fit the domain".into()));
        }
        let chi = Character { domain: domain.clone(), modulus: m, exps };
        chi.check_homomorphism(g)?;
        Ok(chi)
    }

    fn check_homomorphism(&self, g: &Group) -> Result<(), CharError> {
        let e = self.domain.elements();
        for (i, &x) in e.iter().enumerate() {
            for (j, &y) in e.iter().enumerate() {
                let k = self.domain.position(g.mul(x, y)).ok_or(CharError::NotASubgroup)?;
                if (self.exps[i] + self.exps[j]) % self.modulus != self.exps[k] {
                    return Err(CharError::NotACharacter(format!("χ({x})χ({y}) != χ({x}·{y})")));
                }
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of χ(x) relative to ζ_m; panics outside the domain.
    pub fn exponent_at(&self, x: Elem) -> u32 {
        self.exps[self.domain.position(x).expect("element in domain")]
    }

    pub fn value(&self, x: Elem) -> RootOfUnity {
        RootOfUnity::new(self.exponent_at(x) as i64, self.modulus as u64)
    }

    pub fn value_cyclotomic(&self, x: Elem) -> Cyclotomic {
        self.value(x).to_cyclotomic()
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&k| k == 0)
    }

    pub fn is_trivial_on(&self, sub: &Subgroup) -> bool {
        sub.elements().iter().all(|&x| self.exponent_at(x) == 0)
    }

    /// Order of χ in the character group.
    pub fn order(&self) -> u32 {
        self.exps.iter().fold(1, |acc, &k| acc.lcm(&(self.modulus / self.modulus.gcd(&k))))
    }

    /// Pointwise product; both characters must share the domain.
    pub fn mul(&self, other: &Character) -> Character {
        assert_eq!(self.domain, other.domain, "characters on different domains");
        Character {
            domain: self.domain.clone(),
            modulus: self.modulus,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| (a + b) % self.modulus).collect(),
        }
    }

    pub fn inverse(&self) -> Character {
        self.pow(-1)
    }

    pub fn pow(&self, e: i64) -> Character {
        let m = self.modulus as i64;
        Character {
            domain: self.domain.clone(),
            modulus: self.modulus,
            exps: self.exps.iter().map(|&k| (k as i64 * e).rem_euclid(m) as u32).collect(),
        }
    }

    /// Restriction to a subgroup of the domain.
    pub fn restrict(&self, g: &Group, sub: &Subgroup) -> Character {
        assert!(sub.is_subgroup_of(&self.domain), "restriction to a non-subgroup");
        let m = abelianization_exponent(g, sub);
        let exps = sub
            .elements()
            .iter()
            .map(|&x| self.value(x).exponent_for(m as u64).expect("restricted values have order dividing m") as u32)
            .collect();
        Character { domain: sub.clone(), modulus: m, exps }
    }

    /// χ^x on H^x = x⁻¹Hx, with χ^x(y) = χ(x y x⁻¹).
    pub fn conjugate(&self, g: &Group, x: Elem) -> Character {
        let domain = g.conjugate_subgroup(&self.domain, x);
        let exps = domain.elements().iter().map(|&y| self.exponent_at(g.conj(x, y))).collect();
        Character { domain, modulus: self.modulus, exps }
    }

    /// Transport along an order-preserving relabelling of the domain (as
    /// produced by [`Group::embed`]): the exponent vector is unchanged.
    pub fn relabel(&self, domain: Subgroup) -> Character {
        assert_eq!(domain.order(), self.domain.order());
        Character { domain, modulus: self.modulus, exps: self.exps.clone() }
    }

    /// Serialised as `(elements) : (exponents, m)`.
    pub fn to_literal(&self) -> String {
        let e: Vec<String> = self.domain.elements().iter().map(|x| x.to_string()).collect();
        let k: Vec<String> = self.exps.iter().map(|x| x.to_string()).collect();
        format!("({}) : ({}, {})", e.join(" "), k.join(" "), self.modulus)
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}

/// All linear characters of H, sorted by exponent tuple.
pub fn characters_of(g: &Group, h: &Subgroup) -> Vec<Character> {
    let m = abelianization_exponent(g, h);
    let d = g.derived_subgroup(h);
    let sec = g.section(h, &d).expect("[H,H] is normal in H");
    let a = sec.group();
    // Extend homomorphisms A → Z/m one generator at a time.
    let mut span: Vec<Elem> = vec![0];
    let mut in_span = vec![false; a.order()];
    in_span[0] = true;
    let mut partial: Vec<Vec<u32>> = vec![vec![0; a.order()]];
    for x in a.elements() {
        if in_span[x] {
            continue;
        }
        let mut r = 1;
        let mut y = x;
        while !in_span[y] {
            y = a.mul(y, x);
            r += 1;
        }
        // y = x^r lies in the current span
        let mut next_span = Vec::with_capacity(span.len() * r);
        let mut power = 0;
        for _ in 0..r {
            for &s in &span {
                next_span.push(a.mul(s, power));
            }
            power = a.mul(power, x);
        }
        let mut next = Vec::new();
        for phi in &partial {
            let target = phi[y];
            for k in 0..m {
                if (r as u32 * k) % m != target {
                    continue;
                }
                let mut ext = phi.clone();
                let mut power = 0;
                for i in 0..r as u32 {
                    for &s in &span {
                        ext[a.mul(s, power)] = (phi[s] + i * k) % m;
                    }
                    power = a.mul(power, x);
                }
                next.push(ext);
            }
        }
        for &z in &next_span {
            in_span[z] = true;
        }
        span = next_span;
        partial = next;
    }
    let mut out: Vec<Character> = partial
        .into_iter()
        .map(|phi| Character {
            domain: h.clone(),
            modulus: m,
            exps: h.elements().iter().map(|&x| phi[sec.project(x)]).collect(),
        })
        .collect();
    out.sort();
    out
}
