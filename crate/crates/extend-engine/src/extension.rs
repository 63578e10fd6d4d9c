use std::collections::HashMap;

use brauer_ring::{BrauerContext, PairClass, PivotRule, RPlusElement};
use char_core::{character_table, ClassFunction};
use group_core::exec::Strategy;
use group_core::{Group, Subgroup};
use relations::{generate_relations, Options, RelationKind};

use crate::conditions::check_conditions;
use crate::delta::DeltaFunction;
use crate::error::ExtendError;
use crate::lambda::{LambdaEngine, LambdaOptions, LambdaTable};
use crate::value::ValueGroup;

#[derive(Clone, Copy, Debug, Default)]
pub struct ExtendOptions {
    /// Also certify on the whole Hermite basis of the kernel.
    pub full_kernel: bool,
    /// Pivoting for the presentation solver.
    pub rule: PivotRule,
    pub strategy: Strategy,
    pub lambda: LambdaOptions,
}

/// The extension ℱ of Δ to R(N ≤ Ω), evaluated through Brauer presentations
/// and λ_·^Ω.
#[derive(Clone)]
pub struct Extension<A: ValueGroup> {
    delta: DeltaFunction<A>,
    lambda_omega: HashMap<Subgroup, A>,
    rule: PivotRule,
    certified: usize,
    full_kernel: bool,
}

/// Check conditions I–III, compute λ_·^Ω and certify ℱ on the kernel
/// generators of all three kinds.
pub fn extend<A: ValueGroup>(delta: &DeltaFunction<A>, options: ExtendOptions) -> Result<Extension<A>, ExtendError> {
    if let Some(v) = check_conditions(delta, options.strategy)?.into_iter().next() {
        return Err(ExtendError::ConditionsViolated { kind: v.kind, witness: v.summary() });
    }
    let ext = Extension::unchecked(delta, options)?;
    Ok(ext)
}

impl<A: ValueGroup> Extension<A> {
    /// λ_·^Ω and the kernel certificate, without the condition checks.
    pub fn unchecked(delta: &DeltaFunction<A>, options: ExtendOptions) -> Result<Extension<A>, ExtendError> {
        let g = delta.group();
        let engine = LambdaEngine::with_options(delta, options.lambda);
        let mut lambda_omega = HashMap::new();
        for u in g.subgroups().iter().filter(|u| delta.lower().is_subgroup_of(u)) {
            lambda_omega.insert(u.clone(), engine.lambda(u)?);
        }
        let mut ext = Extension {
            delta: delta.clone(),
            lambda_omega,
            rule: options.rule,
            certified: 0,
            full_kernel: options.full_kernel,
        };
        let rels = generate_relations(
            g,
            delta.lower(),
            &RelationKind::ALL,
            Options { strategy: options.strategy, ..Options::default() },
        )?;
        for rel in &rels {
            ext.certify(&rel.element, &format!("{} B={:?} {}", rel.kind, rel.b.elements(), rel.element.to_text()))?;
        }
        ext.certified = rels.len();
        if options.full_kernel {
            let basis = delta.context().kernel_basis()?;
            for v in &basis {
                ext.certify(v, &format!("kernel {}", v.to_text()))?;
            }
            ext.certified += basis.len();
        }
        Ok(ext)
    }

    fn certify(&self, x: &RPlusElement, label: &str) -> Result<(), ExtendError> {
        let value = self.evaluate_element(x)?;
        if value.is_one() {
            Ok(())
        } else {
            Err(ExtendError::NotWellDefined { relation: label.to_string(), value: value.to_text() })
        }
    }

    pub fn delta(&self) -> &DeltaFunction<A> {
        &self.delta
    }

    pub fn group(&self) -> &Group {
        self.delta.group()
    }

    /// Number of kernel elements on which ℱ was certified.
    pub fn certified_relations(&self) -> usize {
        self.certified
    }

    pub fn checked_full_kernel(&self) -> bool {
        self.full_kernel
    }

    pub fn rule(&self) -> PivotRule {
        self.rule
    }

    /// λ_U^Ω.
    pub fn lambda_omega(&self, u: &Subgroup) -> Result<A, ExtendError> {
        self.lambda_omega.get(u).cloned().ok_or(ExtendError::OutOfRange)
    }

    /// λ_U^H = λ_U^Ω · (λ_H^Ω)^{−(H:U)}.
    pub fn lambda(&self, u: &Subgroup, h: &Subgroup) -> Result<A, ExtendError> {
        if !u.is_subgroup_of(h) {
            return Err(ExtendError::OutOfRange);
        }
        let index = (h.order() / u.order()) as i64;
        Ok(self.lambda_omega(u)?.mul(&self.lambda_omega(h)?.pow(-index)))
    }

    pub fn lambda_table(&self) -> Result<LambdaTable<A>, ExtendError> {
        LambdaEngine::new(&self.delta).table()
    }

    /// ∏ (Δ(U, χ)·λ_U^Ω)^n for x = Σ n[U, χ] in R₊(N ≤ Ω), i.e. ℱ(Ω, φ(x)).
    pub fn evaluate_element(&self, x: &RPlusElement) -> Result<A, ExtendError> {
        let mut acc = A::one();
        for (class, n) in x.terms() {
            let chi = class.character();
            acc = acc.mul(&self.delta.value(chi)?.mul(&self.lambda_omega(chi.domain())?).pow(n));
        }
        Ok(acc)
    }

    /// The group H as a standalone group, with its pair classes mapped back
    /// to Ω.  For H = Ω this is Ω itself.
    fn local(&self, h: &Subgroup) -> Result<Local, ExtendError> {
        let g = self.group();
        let n = self.delta.lower();
        if !n.is_subgroup_of(h) {
            return Err(ExtendError::OutOfRange);
        }
        if *h == g.whole() {
            return Ok(Local { group: g.clone(), lower: n.clone(), emb: None });
        }
        let emb = g.embed(h);
        Ok(Local { group: emb.group().clone(), lower: emb.image(n), emb: Some(emb) })
    }

    /// ℱ(H, ρ) for a virtual character ρ of H trivial on [N, N]; ρ lives on
    /// `g.embed(h).group()`, or on Ω itself when H = Ω.
    pub fn evaluate(&self, h: &Subgroup, rho: &ClassFunction) -> Result<A, ExtendError> {
        self.evaluate_with(h, rho, self.rule)
    }

    pub fn evaluate_with(&self, h: &Subgroup, rho: &ClassFunction, rule: PivotRule) -> Result<A, ExtendError> {
        let local = self.local(h)?;
        let ctx = BrauerContext::shared(&local.group, &local.lower)?;
        let x = ctx.presentation(rho, rule)?;
        let mut acc = A::one();
        for (class, n) in x.terms() {
            let chi = local.to_omega(class);
            acc = acc.mul(&self.delta.value(&chi)?.mul(&self.lambda(chi.domain(), h)?).pow(n));
        }
        Ok(acc)
    }

    /// ∏ Δ(H_i, χ_i)^{n_i} from ρ − dim(ρ)·1 = Σ n_i Ind(χ_i − 1).
    pub fn evaluate_via_dim0(&self, h: &Subgroup, rho: &ClassFunction) -> Result<A, ExtendError> {
        let local = self.local(h)?;
        let ctx = BrauerContext::shared(&local.group, &local.lower)?;
        let dim = rho.degree_int().ok_or_else(|| ExtendError::Parse("degree is not an integer".into()))?;
        let reduced = rho.sub(&ClassFunction::trivial(&local.group).scale(dim as i64));
        let mut acc = A::one();
        for (class, n) in ctx.dim0_presentation(&reduced, self.rule)? {
            acc = acc.mul(&self.delta.value(&local.to_omega(&class))?.pow(n));
        }
        Ok(acc)
    }

    /// Irreducible characters of H trivial on [N, N] (as class functions on
    /// the local copy of H).
    pub fn local_irreducibles(&self, h: &Subgroup) -> Result<Vec<ClassFunction>, ExtendError> {
        let local = self.local(h)?;
        let derived = local.group.derived_subgroup(&local.lower);
        let table = character_table(&local.group)?;
        Ok(table.irreducibles().iter().filter(|cf| cf.is_trivial_on(&derived)).cloned().collect())
    }
}

struct Local {
    group: Group,
    lower: Subgroup,
    emb: Option<group_core::Embedding>,
}

impl Local {
    fn to_omega(&self, class: &PairClass) -> char_core::Character {
        let chi = class.character();
        match &self.emb {
            None => chi.clone(),
            Some(emb) => chi.relabel(emb.preimage(chi.domain())),
        }
    }
}

/// Whether two extensions of Δ agree on every irreducible of every H ⊇ N.
pub fn uniqueness_check<A: ValueGroup>(first: &Extension<A>, second: &Extension<A>) -> bool {
    let g = first.group();
    if g != second.group() || first.delta.lower() != second.delta.lower() {
        return false;
    }
    let n = first.delta.lower();
    for h in g.subgroups().iter().filter(|h| n.is_subgroup_of(h)) {
        let Ok(irreducibles) = first.local_irreducibles(h) else { return false };
        for rho in &irreducibles {
            match (first.evaluate(h, rho), second.evaluate(h, rho)) {
                (Ok(a), Ok(b)) if a == b => {}
                _ => return false,
            }
        }
    }
    true
}
