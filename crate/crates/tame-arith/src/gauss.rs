use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use char_core::{Cyclotomic, RootOfUnity};
use num_integer::Integer;

use crate::field::FiniteField;
use crate::root::RootValue;

/// The character g^t ↦ ζ_{q−1}^{exponent·t} of F_q^×.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicativeCharacter {
    pub exponent: u64,
}

/// The character x ↦ ζ_p^{Tr(multiplier·x)} of F_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AdditiveCharacter {
    pub multiplier: u64,
}

impl MultiplicativeCharacter {
    pub fn new(field: &FiniteField, exponent: i64) -> MultiplicativeCharacter {
        MultiplicativeCharacter { exponent: exponent.rem_euclid((field.order() - 1) as i64) as u64 }
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent == 0
    }

    pub fn order(&self, field: &FiniteField) -> u64 {
        let m = field.order() - 1;
        m / self.exponent.gcd(&m)
    }

    pub fn value(&self, field: &FiniteField, x: u64) -> Option<RootOfUnity> {
        let t = field.dlog(x)?;
        let m = field.order() - 1;
        Some(RootOfUnity::new((self.exponent as u128 * t as u128 % m as u128) as i64, m))
    }
}

impl AdditiveCharacter {
    /// ψ̄(x) = ζ_p^{Tr x}.
    pub const STANDARD: AdditiveCharacter = AdditiveCharacter { multiplier: 1 };

    pub fn value(&self, field: &FiniteField, x: u64) -> RootOfUnity {
        let p = field.characteristic();
        RootOfUnity::new(field.trace(field.mul(self.multiplier, x)) as i64, p)
    }
}

type GaussKey = (u64, u32, u64, u64);

fn cache() -> &'static Mutex<HashMap<GaussKey, Cyclotomic>> {
    static CACHE: OnceLock<Mutex<HashMap<GaussKey, Cyclotomic>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Σ_{x ∈ F_q^×} χ̄⁻¹(x)·ψ̄(x), exactly.
///
/// The value lies in Q(ζ_p, ζ_o) for o the order of χ̄, a subfield of
/// Q(ζ_{lcm(p, q−1)}); it is computed there.
pub fn gauss_sum(field: &FiniteField, chi: MultiplicativeCharacter, psi: AdditiveCharacter) -> RootValue {
    let key = (field.characteristic(), field.degree(), chi.exponent, psi.multiplier);
    if let Some(c) = cache().lock().unwrap().get(&key) {
        return RootValue::from_cyclotomic(c.clone());
    }
    let p = field.characteristic();
    let o = chi.order(field);
    let step = (field.order() - 1) / o;
    let reduced = chi.exponent / step;
    let m = p * o;
    let mut counts = vec![0i128; m as usize];
    for x in 1..field.order() {
        let t = field.dlog(x).expect("nonzero");
        let tr = field.trace(field.mul(psi.multiplier, x));
        // ζ_o^{−s t} ζ_p^{tr} in terms of ζ_{po}
        let e = ((o - reduced * t % o) % o * p + tr * o) % m;
        counts[e as usize] += 1;
    }
    let c = Cyclotomic::from_counts(m as u32, &counts);
    cache().lock().unwrap().insert(key, c.clone());
    RootValue::from_cyclotomic(c)
}
