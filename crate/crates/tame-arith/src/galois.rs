use char_core::{Character, RootOfUnity};
use extend_engine::DeltaFunction;
use group_core::{catalog, Elem, Group, Subgroup};

use crate::error::TameError;
use crate::field::is_prime;
use crate::root::RootValue;
use crate::tame::{closure_degree, root_number, TameChar, TameField};

/// A finite tame Galois extension K|F with explicit local class field theory.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaloisModel {
    /// The unramified extension of degree n: Ω = C_n.
    Unramified { q: u64, degree: u64 },
    /// F(π^{1/m}) for m | q − 1: Ω = C_m.
    Kummer { q: u64, degree: u64 },
    /// F(π^{1/ℓ}) times the unramified extension of degree ℓ, for ℓ | q − 1:
    /// Ω = C_ℓ × C_ℓ.
    Bicyclic { q: u64, ell: u64 },
    /// The Galois closure of F(π^{1/ℓ}) for ℓ ∤ q − 1: Ω = C_ℓ ⋊ C_n with
    /// n = ord(q mod ℓ).  (q, ℓ) = (2, 3) gives S3.
    Metacyclic { q: u64, ell: u64 },
}

impl GaloisModel {
    pub fn q(&self) -> u64 {
        match *self {
            GaloisModel::Unramified { q, .. }
            | GaloisModel::Kummer { q, .. }
            | GaloisModel::Bicyclic { q, .. }
            | GaloisModel::Metacyclic { q, .. } => q,
        }
    }
}

#[derive(Clone)]
enum Structure {
    /// Artin images of π_F and of the generator of κ_F^×, and the fixed
    /// field of every subgroup.
    Abelian { uniformizer: Elem, generator: Elem, fields: Vec<(Subgroup, TameField)> },
    /// τ generates C = Gal(K|L), φ is the Frobenius fixing π^{1/ℓ}, with
    /// φτφ⁻¹ = τ^q.
    Metacyclic { tau: Elem, phi: Elem, ell: u64, n: u64 },
}

/// A Galois model realised on a concrete group, with the correspondence
/// (H, χ) ↦ (fixed field of H, character of its multiplicative group).
#[derive(Clone)]
pub struct Realization {
    model: GaloisModel,
    base: TameField,
    group: Group,
    structure: Structure,
}

fn named_or(name: &str, build: impl FnOnce() -> Group) -> Group {
    catalog::by_name(name).unwrap_or_else(|_| build())
}

fn least_of_order(g: &Group, order: usize, filter: impl Fn(Elem) -> bool) -> Option<Elem> {
    g.elements().find(|&x| g.element_order(x) == order && filter(x))
}

impl Realization {
    /// Realise `model` with ψ_F of the given level.
    pub fn new(model: GaloisModel, level: i64) -> Result<Realization, TameError> {
        let base = TameField::base(model.q(), level)?;
        let q = base.q();
        let unsupported = |m: &str| TameError::UnsupportedModel(format!("{model:?}: {m}"));
        let log_minus_one = base.residue_field().log_minus_one() as i64;
        let (group, structure) = match model {
            GaloisModel::Unramified { degree, .. } => {
                if degree == 0 {
                    return Err(unsupported("degree 0"));
                }
                let n = degree as usize;
                let g = named_or(&format!("C{n}"), || catalog::cyclic(n));
                let phi = least_of_order(&g, n, |_| true).expect("cyclic group has a generator");
                let fields = g
                    .subgroups()
                    .iter()
                    .map(|h| Ok((h.clone(), base.extension(1, (n / h.order()) as u32)?)))
                    .collect::<Result<_, TameError>>()?;
                (g, Structure::Abelian { uniformizer: phi, generator: 0, fields })
            }
            GaloisModel::Kummer { degree, .. } => {
                if degree == 0 || (q - 1) % degree != 0 {
                    return Err(unsupported("the degree must divide q-1"));
                }
                let m = degree as usize;
                let g = named_or(&format!("C{m}"), || catalog::cyclic(m));
                let tau = least_of_order(&g, m, |_| true).expect("cyclic group has a generator");
                let fields = g
                    .subgroups()
                    .iter()
                    .map(|h| Ok((h.clone(), base.extension((m / h.order()) as u64, 1)?)))
                    .collect::<Result<_, TameError>>()?;
                let structure = Structure::Abelian {
                    uniformizer: g.pow(tau, -log_minus_one),
                    generator: g.inv(tau),
                    fields,
                };
                (g, structure)
            }
            GaloisModel::Bicyclic { ell, .. } => {
                if !is_prime(ell) || (q - 1) % ell != 0 {
                    return Err(unsupported("needs a prime dividing q-1"));
                }
                let l = ell as usize;
                let g = named_or(&format!("C{l}xC{l}"), || {
                    catalog::direct_product(&catalog::cyclic(l), &catalog::cyclic(l), &format!("C{l}xC{l}"))
                });
                let tau = least_of_order(&g, l, |_| true).expect("elements of order ell");
                let inertia = g.generated(&[tau]);
                let phi = least_of_order(&g, l, |x| !inertia.contains(x)).expect("noncyclic");
                let mut fields = Vec::new();
                for h in g.subgroups() {
                    let field = if h.order() == 1 {
                        base.extension(ell, l as u32)?
                    } else if h.order() == l * l {
                        base.base_field()
                    } else if *h == inertia {
                        base.extension(1, l as u32)?
                    } else {
                        // H = ⟨τ^a φ⟩ fixes F((π·g^{−a})^{1/ℓ})
                        let a = (0..l as i64)
                            .find(|&a| h.contains(g.mul(g.pow(tau, a), phi)))
                            .expect("a complement to the inertia group");
                        base.extension_with_unit(ell, 1, -a)?
                    };
                    fields.push((h.clone(), field));
                }
                let structure = Structure::Abelian {
                    uniformizer: g.mul(g.pow(tau, -log_minus_one), phi),
                    generator: g.inv(tau),
                    fields,
                };
                (g, structure)
            }
            GaloisModel::Metacyclic { ell, .. } => {
                if !is_prime(ell) || ell == base.p() {
                    return Err(unsupported("needs a prime different from p"));
                }
                if (q - 1) % ell == 0 {
                    return Err(TameError::DegenerateCase(format!("{ell} divides q-1; the closure is cyclic")));
                }
                let n = closure_degree(q, ell);
                let (l, nn, r) = (ell as usize, n as usize, (q % ell) as usize);
                let name = if (l, nn) == (3, 2) { "S3".to_string() } else { format!("C{l}:C{nn}") };
                let g = named_or(&name, || catalog::semidirect(l, nn, r, &name));
                let tau = least_of_order(&g, l, |_| true).expect("normal subgroup of order ell");
                let phi = least_of_order(&g, nn, |x| g.conj(x, tau) == g.pow(tau, r as i64))
                    .expect("a Frobenius element acting by q");
                (g, Structure::Metacyclic { tau, phi, ell, n })
            }
        };
        Ok(Realization { model, base, group, structure })
    }

    pub fn model(&self) -> GaloisModel {
        self.model
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn base(&self) -> &TameField {
        &self.base
    }

    /// The fixed field of H.
    pub fn fixed_field(&self, h: &Subgroup) -> Result<TameField, TameError> {
        match &self.structure {
            Structure::Abelian { fields, .. } => fields
                .iter()
                .find(|(k, _)| k == h)
                .map(|(_, f)| f.clone())
                .ok_or_else(|| TameError::UnsupportedModel("not a subgroup of the model group".into())),
            Structure::Metacyclic { tau, ell, n, .. } => {
                let index = (self.group.order() / h.order()) as u64;
                if h.contains(*tau) {
                    self.base.extension(1, index as u32)
                } else {
                    // conjugate to a subgroup of ⟨φ⟩, fixing E·(unramified of degree [Ω:H]/ℓ)
                    self.base.extension(*ell, (index / ell).max(1).min(*n) as u32)
                }
            }
        }
    }

    /// The character of (fixed field of H)^× that corresponds to χ ∈ H* under
    /// the reciprocity map.
    pub fn local_character(&self, chi: &Character) -> Result<TameChar, TameError> {
        let g = &self.group;
        let h = chi.domain();
        let field = self.fixed_field(h)?;
        if h.order() == 1 {
            return Ok(TameChar::trivial(&field));
        }
        match &self.structure {
            Structure::Abelian { uniformizer, generator, .. } => {
                // art_M(x) = art_F(N_{M|F} x) in the abelian case
                let (v, t) = field.norm_of_uniformizer();
                let x_pi = g.mul(g.pow(*uniformizer, v), g.pow(*generator, t as i64));
                let x_g = g.pow(*generator, field.norm_of_generator() as i64);
                if !h.contains(x_pi) || !h.contains(x_g) {
                    return Err(TameError::UnsupportedModel("norms do not land in the subgroup".into()));
                }
                residue_character(&field, chi.value(x_g), chi.value(x_pi))
            }
            Structure::Metacyclic { tau, phi, ell, n } => {
                let index = (g.order() / h.order()) as u64;
                if h.contains(*tau) {
                    if index == *n {
                        // K|L is Kummer: art_L(u) = τ^{−log ū}, art_L(−π) = 1
                        let j = chi.value(*tau).exponent_for(*ell).expect("order divides ell") as i64;
                        let big = (field.residue_order() - 1) as i64;
                        let s = -j * (big / *ell as i64);
                        let residue = TameChar::new(&field, s, RootOfUnity::ONE);
                        return Ok(TameChar::new(&field, s, residue.at_minus_one()));
                    }
                    // H^ab = H/C, the Galois group of L over the fixed field
                    return Ok(TameChar::unramified(&field, chi.value(g.pow(*phi, index as i64))));
                }
                let f = n / h.order() as u64;
                let frob = g.pow(*phi, f as i64);
                let standard = g.generated(&[frob]);
                let x = *g
                    .conjugators(h, &standard)
                    .first()
                    .ok_or_else(|| TameError::UnsupportedModel("complement not conjugate into <phi>".into()))?;
                let moved = chi.conjugate(g, x);
                Ok(TameChar::unramified(&field, moved.value(frob)))
            }
        }
    }

    /// Δ(H, χ) = Δ(E_H, χ_E) on every pair of Ω.
    pub fn delta(&self) -> Result<DeltaFunction<RootValue>, TameError> {
        let g = &self.group;
        let mut delta = DeltaFunction::partial(g, &g.trivial())?;
        for class in delta.classes().to_vec() {
            let chi = class.character();
            delta.set(chi, root_number(&self.local_character(chi)?))?;
        }
        Ok(delta)
    }
}

fn residue_character(field: &TameField, at_generator: RootOfUnity, at_uniformizer: RootOfUnity) -> Result<TameChar, TameError> {
    let big = field.residue_order() - 1;
    let s = at_generator
        .exponent_for(big)
        .ok_or_else(|| TameError::BadCharacterValue(format!("{:?}", at_generator.fraction())))?;
    Ok(TameChar::new(field, s as i64, at_uniformizer))
}

/// Δ on R₁(≤ Ω) for the model, with ψ_F of level 0.
pub fn galois_delta(model: GaloisModel) -> Result<DeltaFunction<RootValue>, TameError> {
    Realization::new(model, 0)?.delta()
}
