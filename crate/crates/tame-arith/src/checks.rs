use std::collections::BTreeSet;

use char_core::RootOfUnity;
use extend_engine::ValueGroup;
use group_core::exec::{self, Strategy};

use crate::error::TameError;
use crate::field::is_prime;
use crate::root::RootValue;
use crate::tame::{abelian_case, closure_degree, norm_characters, root_number, twist_exponent, TameChar, TameField};

/// Both sides of one exact identity.
#[derive(Clone, Debug)]
pub struct Identity {
    pub lhs: RootValue,
    pub rhs: RootValue,
}

impl Identity {
    pub fn new(lhs: RootValue, rhs: RootValue) -> Identity {
        Identity { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The outcome of a Davenport–Hasse type check: the full identity and,
/// where it applies, the reduced form for odd degree.
#[derive(Clone, Debug)]
pub struct DhReport {
    pub instance: String,
    pub full: Identity,
    pub odd: Option<Identity>,
}

impl DhReport {
    pub fn holds(&self) -> bool {
        self.full.holds() && self.odd.as_ref().is_none_or(Identity::holds)
    }
}

fn product<'a>(chars: impl IntoIterator<Item = &'a TameChar>) -> RootValue {
    chars.into_iter().fold(RootValue::one(), |acc, c| acc.mul(&root_number(c)))
}

fn describe(chi: &TameChar) -> String {
    let (num, den) = chi.uniformizer_value().fraction();
    format!("s={} z={num}/{den}", chi.residue_exponent())
}

/// Δ(K, χ∘N)·∏_{μ∈S} Δ(F, μ) = ∏_{μ∈S} Δ(F, χμ) for K|F abelian tame of
/// prime degree ℓ; for ℓ odd also Δ(K, χ∘N) = ∏ Δ(F, χμ).
pub fn check_dh_i(k: &TameField, chi: &TameChar) -> Result<DhReport, TameError> {
    let case = abelian_case(k)?;
    let s = norm_characters(k)?;
    let pulled = root_number(&k.pull_back(chi)?);
    let twisted: Vec<TameChar> = s.iter().map(|mu| chi.mul(mu)).collect();
    let rhs = product(&twisted);
    let full = Identity::new(pulled.mul(&product(&s)), rhs.clone());
    let odd = (s.len() % 2 == 1 && s.len() > 1).then(|| Identity::new(pulled, rhs));
    Ok(DhReport { instance: format!("q={} {case:?} {}", k.q(), describe(chi)), full, odd })
}

/// `check_dh_i` over many characters of the base.
pub fn check_dh_i_batch(k: &TameField, chars: &[TameChar], strategy: Strategy) -> Result<Vec<DhReport>, TameError> {
    exec::map(strategy, chars, |chi| check_dh_i(k, chi)).into_iter().collect()
}

/// The data of the tame type-III situation: E = F(π^{1/ℓ}), L|F unramified of
/// degree ord(q mod ℓ), K = L·E, and S(K|L) split into Frobenius orbits.
#[derive(Clone, Debug)]
pub struct TypeThreeSetup {
    pub base: TameField,
    pub ell: u64,
    pub e_field: TameField,
    pub l_field: TameField,
    /// Orbits of the nontrivial characters of L^×/N_{K|L}(K^×) under
    /// μ ↦ μ∘Frob_F, each sorted, in order of their least member.
    pub orbits: Vec<Vec<TameChar>>,
}

impl TypeThreeSetup {
    pub fn new(base: &TameField, ell: u64) -> Result<TypeThreeSetup, TameError> {
        let q = base.q();
        if !is_prime(ell) {
            return Err(TameError::NotAbelianTameCase(format!("{ell} is not prime")));
        }
        if ell == base.p() {
            return Err(TameError::WildRamification { e: ell, p: base.p() });
        }
        if (q - 1).is_multiple_of(ell) {
            return Err(TameError::DegenerateCase(format!("{ell} divides q-1 = {}; use check_dh_i", q - 1)));
        }
        let n = closure_degree(q, ell) as u32;
        let e_field = base.extension(ell, 1)?;
        let l_field = base.extension(1, n)?;
        let big = l_field.residue_order() - 1;
        // K = L(π^{1/ℓ}) over L: μ̄ of order ℓ, μ(π) = μ̄((−1)^{ℓ−1})^{-1} = 1 for ℓ odd
        let mut seen = BTreeSet::new();
        let mut orbits = Vec::new();
        for j in 1..ell {
            let s = j * (big / ell);
            if seen.contains(&s) {
                continue;
            }
            let mut orbit = BTreeSet::new();
            let mut t = s;
            while orbit.insert(t) {
                t = (t as u128 * q as u128 % big as u128) as u64;
            }
            seen.extend(orbit.iter().copied());
            orbits.push(orbit.into_iter().map(|s| TameChar::new(&l_field, s as i64, RootOfUnity::ONE)).collect());
        }
        Ok(TypeThreeSetup { base: base.clone(), ell, e_field, l_field, orbits })
    }

    /// [K:F] = ℓ·[L:F].
    pub fn closure_degree(&self) -> u64 {
        self.ell * self.l_field.inertia_degree() as u64
    }

    /// One representative per orbit, the least member.
    pub fn representatives(&self) -> Vec<TameChar> {
        self.orbits.iter().map(|o| o[0].clone()).collect()
    }

    /// Representatives stable under μ ↦ μ⁻¹ (for odd [K:F], where no orbit is
    /// self-inverse).
    pub fn inverse_stable_representatives(&self) -> Vec<TameChar> {
        let mut out: Vec<TameChar> = Vec::new();
        for orbit in &self.orbits {
            if out.iter().any(|r| orbit.contains(&r.inverse())) {
                continue;
            }
            let rep = orbit[0].clone();
            if !orbit.contains(&rep.inverse()) {
                out.push(rep.inverse());
            }
            out.push(rep);
        }
        out
    }
}

/// Δ(E, χ∘N_{E|F})·∏_{[μ]≠μ₀} Δ(L, μ) = Δ(F, χ)·∏_{[μ]≠μ₀} Δ(L, (χ∘N_{L|F})μ),
/// and for odd [K:F] the reduced form without the left product, over
/// representatives stable under inversion.
pub fn check_dh_iii_tame(base: &TameField, ell: u64, chi: &TameChar) -> Result<DhReport, TameError> {
    let setup = TypeThreeSetup::new(base, ell)?;
    check_dh_iii_with(&setup, chi)
}

pub fn check_dh_iii_with(setup: &TypeThreeSetup, chi: &TameChar) -> Result<DhReport, TameError> {
    let on_e = root_number(&setup.e_field.pull_back(chi)?);
    let on_l = setup.l_field.pull_back(chi)?;
    let right = |reps: &[TameChar]| {
        let twisted: Vec<TameChar> = reps.iter().map(|mu| on_l.mul(mu)).collect();
        root_number(chi).mul(&product(&twisted))
    };
    let reps = setup.representatives();
    let full = Identity::new(on_e.mul(&product(&reps)), right(&reps));
    let odd = (setup.closure_degree() % 2 == 1).then(|| {
        let stable = setup.inverse_stable_representatives();
        Identity::new(on_e.clone(), right(&stable))
    });
    Ok(DhReport {
        instance: format!("q={} ell={} [L:F]={} {}", setup.base.q(), setup.ell, setup.l_field.inertia_degree(), describe(chi)),
        full,
        odd,
    })
}

/// `check_dh_iii_with` over many characters of the base.
pub fn check_dh_iii_batch(setup: &TypeThreeSetup, chars: &[TameChar], strategy: Strategy) -> Result<Vec<DhReport>, TameError> {
    exec::map(strategy, chars, |chi| check_dh_iii_with(setup, chi)).into_iter().collect()
}

/// Δ(χ)·Δ(χ⁻¹) = χ(−1).
pub fn functional_equation(chi: &TameChar) -> Identity {
    Identity::new(root_number(chi).mul(&root_number(&chi.inverse())), RootValue::root(chi.at_minus_one()))
}

/// Δ(χ⁻¹) = Δ(χ)⁻¹ for χ of odd order; `None` for even order.
pub fn odd_order_reduction(chi: &TameChar) -> Option<Identity> {
    (chi.order() % 2 == 1).then(|| Identity::new(root_number(&chi.inverse()), root_number(chi).inv()))
}

/// Δ(χ)/Δ(χ|·|^s) = q_E^{s·(a − ℓ(ψ))} for the twist with q_E^{−s} = ω.
pub fn twist_identity(chi: &TameChar, omega: RootOfUnity) -> Identity {
    let ratio = root_number(chi).div(&root_number(&chi.twist(omega)));
    Identity::new(ratio, RootValue::root(omega.pow(-twist_exponent(chi))))
}

/// Both sides of a_F(Ind ρ) − [K:F]·dim·ℓ(ψ_F) = f·(a_K − dim·ℓ(ψ_{K|F})),
/// with a_F(Ind ρ) = f·(d·dim + a_K) and ℓ(ψ_{K|F}) = e·ℓ(ψ_F) − d.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConductorCheck {
    pub lhs: i64,
    pub rhs: i64,
}

impl ConductorCheck {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn conductor_inductivity(e: i64, f: i64, d: i64, a_k: i64, dim: i64, level: i64) -> ConductorCheck {
    let induced = f * (d * dim + a_k);
    let lhs = induced - e * f * dim * level;
    let rhs = f * (a_k - dim * (e * level - d));
    ConductorCheck { lhs, rhs }
}

/// f_K·(a_K(χ∘N) − ℓ(ψ_K)) = Σ_{μ∈S} (a_F(χμ) − ℓ(ψ_F)): the twist
/// exponents of the two sides of Ind_{K|F}(χ∘N) = Σ χμ.
pub fn r1_twist_exponents(k: &TameField, chi: &TameChar) -> Result<ConductorCheck, TameError> {
    let lhs = k.inertia_degree() as i64 * twist_exponent(&k.pull_back(chi)?);
    let rhs = norm_characters(k)?.iter().map(|mu| twist_exponent(&chi.mul(mu))).sum();
    Ok(ConductorCheck { lhs, rhs })
}

/// The characters ν of F^× with ν∘N_{K|F} = χ∘N_{K|F}, among those with
/// ν(π) in μ_m, compared with {χμ : μ ∈ S(K|F)}.
pub fn r1_fibre_matches(k: &TameField, chi: &TameChar, m: u64) -> Result<bool, TameError> {
    let target = k.pull_back(chi)?;
    let f = k.base_field();
    let mut fibre = Vec::new();
    for nu in f.characters(m) {
        if k.pull_back(&nu)? == target {
            fibre.push(nu);
        }
    }
    let mut expected: Vec<TameChar> = norm_characters(k)?.iter().map(|mu| chi.mul(mu)).collect();
    let key = |c: &TameChar| (c.residue_exponent(), c.uniformizer_value());
    fibre.sort_by_key(key);
    expected.sort_by_key(key);
    Ok(fibre == expected)
}
