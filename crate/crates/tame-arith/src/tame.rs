use std::fmt;
use std::sync::Arc;

use char_core::RootOfUnity;
use extend_engine::ValueGroup;
use num_integer::Integer;

use crate::error::TameError;
use crate::field::{is_prime, mod_inverse, FiniteField};
use crate::gauss::{gauss_sum, AdditiveCharacter, MultiplicativeCharacter};
use crate::root::RootValue;

/// A tamely ramified extension E of the base field F, as far as the tame
/// quotient E^×/U_E^1 = π_E^ℤ × κ_E^× sees it.
///
/// E has ramification index e and residue degree f over F, with a
/// uniformizer satisfying π_E^e = π_F·u for the Teichmüller unit u of F
/// recorded by its discrete log.  The additive character is ψ_F∘Tr_{E|F},
/// where ψ_F has level ℓ(ψ_F) and residual character ζ_p^{Tr(·)}.
#[derive(Clone)]
pub struct TameField {
    base: Arc<FiniteField>,
    residue: Arc<FiniteField>,
    ramification: u64,
    inertia_degree: u32,
    base_level: i64,
    unit: u64,
    /// Discrete log in κ_E of the image of the generator of κ_F.
    base_log: u64,
}

impl fmt::Debug for TameField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TameField(q={}, e={}, f={}, level={}, unit={})",
            self.q(),
            self.ramification,
            self.inertia_degree,
            self.level(),
            self.unit
        )
    }
}

impl PartialEq for TameField {
    fn eq(&self, other: &Self) -> bool {
        self.q() == other.q()
            && self.ramification == other.ramification
            && self.inertia_degree == other.inertia_degree
            && self.base_level == other.base_level
            && self.unit == other.unit
    }
}

impl Eq for TameField {}

impl TameField {
    /// The base field with residue field F_q and ψ_F of the given level.
    pub fn base(q: u64, level: i64) -> Result<TameField, TameError> {
        let residue = FiniteField::of_order(q)?;
        Ok(TameField {
            base: residue.clone(),
            residue,
            ramification: 1,
            inertia_degree: 1,
            base_level: level,
            unit: 0,
            base_log: 1,
        })
    }

    /// The extension with π_E^e = π_F and residue degree f.
    pub fn extension(&self, e: u64, f: u32) -> Result<TameField, TameError> {
        self.extension_with_unit(e, f, 0)
    }

    /// The extension with π_E^e = π_F·u, u the Teichmüller lift of g_F^unit.
    pub fn extension_with_unit(&self, e: u64, f: u32, unit: i64) -> Result<TameField, TameError> {
        if !self.is_base() {
            return Err(TameError::NotOverBase);
        }
        let p = self.p();
        if e == 0 || e.is_multiple_of(p) {
            return Err(TameError::WildRamification { e, p });
        }
        if f == 0 {
            return Err(TameError::NotAbelianTameCase("residue degree 0".into()));
        }
        let residue = FiniteField::new(p, self.base.degree() * f)?;
        let base_log = residue.embedding_of(&self.base)?.generator_log;
        Ok(TameField {
            base: self.base.clone(),
            residue,
            ramification: e,
            inertia_degree: f,
            base_level: self.base_level,
            unit: unit.rem_euclid((self.q() - 1) as i64) as u64,
            base_log,
        })
    }

    /// The base field F of this extension.
    pub fn base_field(&self) -> TameField {
        TameField {
            base: self.base.clone(),
            residue: self.base.clone(),
            ramification: 1,
            inertia_degree: 1,
            base_level: self.base_level,
            unit: 0,
            base_log: 1,
        }
    }

    pub fn is_base(&self) -> bool {
        self.ramification == 1 && self.inertia_degree == 1
    }

    pub fn p(&self) -> u64 {
        self.base.characteristic()
    }

    /// Order of the base residue field.
    pub fn q(&self) -> u64 {
        self.base.order()
    }

    /// q_E = #κ_E.
    pub fn residue_order(&self) -> u64 {
        self.residue.order()
    }

    pub fn residue_field(&self) -> &Arc<FiniteField> {
        &self.residue
    }

    pub fn base_residue_field(&self) -> &Arc<FiniteField> {
        &self.base
    }

    pub fn ramification(&self) -> u64 {
        self.ramification
    }

    pub fn inertia_degree(&self) -> u32 {
        self.inertia_degree
    }

    pub fn degree(&self) -> u64 {
        self.ramification * self.inertia_degree as u64
    }

    /// Exponent of κ_E over the prime field.
    pub fn absolute_residue_degree(&self) -> u32 {
        self.residue.degree()
    }

    /// d_{E|F} = e − 1.
    pub fn differential_exponent(&self) -> i64 {
        self.ramification as i64 - 1
    }

    pub fn base_level(&self) -> i64 {
        self.base_level
    }

    /// ℓ(ψ_{E|F}) = e·ℓ(ψ_F) − d_{E|F}.
    pub fn level(&self) -> i64 {
        self.ramification as i64 * self.base_level - self.differential_exponent()
    }

    pub fn unit_log(&self) -> u64 {
        self.unit
    }

    /// κ_F^× → κ_E^× on discrete logs.
    pub fn embed_base_log(&self, t: u64) -> u64 {
        let m = self.residue_order() - 1;
        (t as u128 * self.base_log as u128 % m as u128) as u64
    }

    /// The residual additive character: x ↦ ψ_{E|F}(x·π_E^{ℓ(ψ_{E|F})−1}),
    /// i.e. multiplication by e·ū^{ℓ(ψ_F)−1} followed by ζ_p^{Tr(·)}.
    pub fn additive_character(&self) -> AdditiveCharacter {
        let qm = (self.q() - 1) as i64;
        let t = (self.unit as i64 * (self.base_level - 1)).rem_euclid(qm) as u64;
        let u = self.residue.exp(self.embed_base_log(t) as i64);
        let e = self.residue.scalar(self.ramification as i64);
        AdditiveCharacter { multiplier: self.residue.mul(e, u) }
    }

    /// N_{E|F}(π_E) = ((−1)^{e−1}·π_F·u)^f as (valuation, discrete log of
    /// the unit part).
    pub fn norm_of_uniformizer(&self) -> (i64, u64) {
        let qm = self.q() - 1;
        let sign = (self.ramification - 1) % 2 * self.base.log_minus_one();
        let t = (self.inertia_degree as u64 * ((sign + self.unit) % qm)) % qm;
        (self.inertia_degree as i64, t)
    }

    /// Discrete log in κ_F of N_{E|F}(g_E) = N_{κ_E|κ_F}(g_E)^e.
    pub fn norm_of_generator(&self) -> u64 {
        let qm = self.q() - 1;
        if qm == 1 {
            return 0;
        }
        let step = (self.residue_order() - 1) / qm;
        let m = self.base_log / step;
        self.ramification % qm * mod_inverse(m % qm, qm) % qm
    }

    /// χ ↦ χ∘N_{E|F} for a character χ of the base field.
    pub fn pull_back(&self, chi: &TameChar) -> Result<TameChar, TameError> {
        if !chi.field.is_base() || chi.field != self.base_field() {
            return Err(TameError::BaseMismatch);
        }
        let qm = self.q() - 1;
        let (v, t) = self.norm_of_uniformizer();
        let z = chi.uniformizer.pow(v).mul(&chi.residue_root(t));
        let big = self.residue_order() - 1;
        let s = chi.residue as u128 * self.norm_of_generator() as u128 % qm as u128;
        let s = (s * (big / qm) as u128 % big as u128) as u64;
        Ok(TameChar { field: self.clone(), residue: s, uniformizer: z })
    }

    /// Every character of E^× with residue part of any order and χ(π_E) in μ_m.
    pub fn characters(&self, m: u64) -> Vec<TameChar> {
        let big = self.residue_order() - 1;
        (0..big)
            .flat_map(|s| (0..m).map(move |j| (s, j)))
            .map(|(s, j)| TameChar { field: self.clone(), residue: s, uniformizer: RootOfUnity::new(j as i64, m) })
            .collect()
    }
}

/// A tame character of E^×: the residue part χ̄ (as an exponent against
/// the generator of κ_E) and z = χ(π_E).
#[derive(Clone, PartialEq, Eq)]
pub struct TameChar {
    field: TameField,
    residue: u64,
    uniformizer: RootOfUnity,
}

impl fmt::Debug for TameChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TameChar(q_E={}, s={}, z={:?})", self.field.residue_order(), self.residue, self.uniformizer.fraction())
    }
}

impl TameChar {
    pub fn new(field: &TameField, residue: i64, uniformizer: RootOfUnity) -> TameChar {
        let big = (field.residue_order() - 1) as i64;
        TameChar { field: field.clone(), residue: residue.rem_euclid(big) as u64, uniformizer }
    }

    /// With an explicit conductor, which must be 0 for trivial χ̄ and 1
    /// otherwise.
    pub fn with_conductor(
        field: &TameField,
        residue: i64,
        uniformizer: RootOfUnity,
        conductor: u32,
    ) -> Result<TameChar, TameError> {
        if conductor > 1 {
            return Err(TameError::NotTame(conductor));
        }
        let chi = Self::new(field, residue, uniformizer);
        if chi.conductor() != conductor {
            return Err(TameError::ConductorMismatch { conductor, residue: chi.residue });
        }
        Ok(chi)
    }

    pub fn trivial(field: &TameField) -> TameChar {
        Self::new(field, 0, RootOfUnity::ONE)
    }

    /// The unramified character with χ(π_E) = z.
    pub fn unramified(field: &TameField, z: RootOfUnity) -> TameChar {
        Self::new(field, 0, z)
    }

    pub fn field(&self) -> &TameField {
        &self.field
    }

    pub fn residue_exponent(&self) -> u64 {
        self.residue
    }

    pub fn residue_character(&self) -> MultiplicativeCharacter {
        MultiplicativeCharacter { exponent: self.residue }
    }

    pub fn uniformizer_value(&self) -> RootOfUnity {
        self.uniformizer
    }

    /// a_E(χ) ∈ {0, 1}.
    pub fn conductor(&self) -> u32 {
        u32::from(self.residue != 0)
    }

    pub fn is_trivial(&self) -> bool {
        self.residue == 0 && self.uniformizer.is_one()
    }

    /// χ̄(g_E^t).
    pub fn residue_root(&self, t: u64) -> RootOfUnity {
        let big = self.field.residue_order() - 1;
        RootOfUnity::new((self.residue as u128 * t as u128 % big as u128) as i64, big)
    }

    /// χ(−1) = χ̄(−1).
    pub fn at_minus_one(&self) -> RootOfUnity {
        self.residue_root(self.field.residue.log_minus_one())
    }

    pub fn order(&self) -> u64 {
        let big = self.field.residue_order() - 1;
        (big / self.residue.gcd(&big)).lcm(&self.uniformizer.order())
    }

    pub fn mul(&self, other: &TameChar) -> TameChar {
        assert_eq!(self.field, other.field, "characters of different fields");
        let big = self.field.residue_order() - 1;
        TameChar {
            field: self.field.clone(),
            residue: (self.residue + other.residue) % big,
            uniformizer: self.uniformizer.mul(&other.uniformizer),
        }
    }

    pub fn inverse(&self) -> TameChar {
        let big = self.field.residue_order() - 1;
        TameChar {
            field: self.field.clone(),
            residue: (big - self.residue) % big,
            uniformizer: self.uniformizer.inv(),
        }
    }

    pub fn pow(&self, e: i64) -> TameChar {
        let big = (self.field.residue_order() - 1) as i128;
        TameChar {
            field: self.field.clone(),
            residue: (self.residue as i128 * e as i128).rem_euclid(big) as u64,
            uniformizer: self.uniformizer.pow(e),
        }
    }

    /// χ·ω^{v(·)}: the unramified twist with |π_E|^s = ω.
    pub fn twist(&self, omega: RootOfUnity) -> TameChar {
        TameChar { uniformizer: self.uniformizer.mul(&omega), ..self.clone() }
    }
}

/// Δ(E, χ) = χ(c)·q_E^{−a/2}·Σ_{U/U^a} χ⁻¹(x)ψ_{E|F}(x/c), with c = π_E^ν and
/// ν = a_E(χ) − ℓ(ψ_{E|F}).
pub fn root_number(chi: &TameChar) -> RootValue {
    let field = &chi.field;
    let nu = twist_exponent(chi);
    let translate = RootValue::root(chi.uniformizer.pow(nu));
    if chi.conductor() == 0 {
        return translate;
    }
    let g = gauss_sum(&field.residue, chi.residue_character(), field.additive_character());
    let norm = RootValue::new(char_core::Cyclotomic::one(), -(field.absolute_residue_degree() as i64), field.p());
    translate.mul(&g).mul(&norm)
}

/// a_E(χ) − ℓ(ψ_{E|F}), the exponent in Δ(E,χ)/Δ(E,χ|·|^s) = q_E^{s·(…)}.
pub fn twist_exponent(chi: &TameChar) -> i64 {
    chi.conductor() as i64 - chi.field.level()
}

/// Which abelian tame case a prime-degree extension K|F is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbelianCase {
    Trivial,
    Unramified(u64),
    Ramified(u64),
}

/// Classify K|F as trivial, unramified of prime degree, or totally tamely
/// ramified of prime degree ℓ with ℓ | q − 1.
pub fn abelian_case(k: &TameField) -> Result<AbelianCase, TameError> {
    let (e, f) = (k.ramification, k.inertia_degree as u64);
    match (e, f) {
        (1, 1) => Ok(AbelianCase::Trivial),
        (1, l) if is_prime(l) => Ok(AbelianCase::Unramified(l)),
        (l, 1) if is_prime(l) && (k.q() - 1).is_multiple_of(l) => Ok(AbelianCase::Ramified(l)),
        (l, 1) if is_prime(l) => {
            Err(TameError::NotAbelianTameCase(format!("ramified of degree {l} with {l} not dividing q-1 = {}", k.q() - 1)))
        }
        _ => Err(TameError::NotAbelianTameCase(format!("e = {e}, f = {f} is not of prime degree"))),
    }
}

/// S(K|F): the characters of F^× trivial on N_{K|F}(K^×), for an abelian
/// tame K|F of prime degree.
pub fn norm_characters(k: &TameField) -> Result<Vec<TameChar>, TameError> {
    let f = k.base_field();
    let qm = k.q() - 1;
    match abelian_case(k)? {
        AbelianCase::Trivial => Ok(vec![TameChar::trivial(&f)]),
        AbelianCase::Unramified(l) => {
            Ok((0..l).map(|j| TameChar::unramified(&f, RootOfUnity::new(j as i64, l))).collect())
        }
        AbelianCase::Ramified(l) => {
            let (_, t) = k.norm_of_uniformizer();
            Ok((0..l)
                .map(|j| {
                    let s = j * (qm / l);
                    let residue = TameChar::new(&f, s as i64, RootOfUnity::ONE);
                    // μ(N π_K) = μ(π_F)·μ̄(unit part) = 1
                    TameChar::new(&f, s as i64, residue.residue_root(t).inv())
                })
                .collect())
        }
    }
}

/// The order of q modulo ℓ, i.e. the degree of the inertia subfield L|F in
/// the Galois closure of F(π^{1/ℓ}).
pub fn closure_degree(q: u64, l: u64) -> u64 {
    crate::field::multiplicative_order(q % l, l)
}
