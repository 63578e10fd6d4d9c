use std::fmt::Write as _;
use std::sync::Arc;

use brauer_ring::{inflate_character, BrauerContext, PairClass, RPlusElement};
use char_core::Character;
use group_core::{Elem, Embedding, Group, QuotientMap, Subgroup};

use crate::error::ExtendError;
use crate::value::ValueGroup;

/// Δ on R₁(N ≤ Ω): one value per conjugacy class of pairs (H, χ) with
/// H ⊇ N, and Δ(H, 1) = 1.
#[derive(Clone)]
pub struct DeltaFunction<A: ValueGroup> {
    context: Arc<BrauerContext>,
    values: Vec<Option<A>>,
}

impl<A: ValueGroup> DeltaFunction<A> {
    /// No values yet; trivial characters already map to 1.
    pub fn partial(g: &Group, n: &Subgroup) -> Result<Self, ExtendError> {
        let context = BrauerContext::shared(g, n).map_err(|e| match e {
            brauer_ring::BrauerError::NotNormal => ExtendError::NotNormal,
            other => other.into(),
        })?;
        let values = context.classes().iter().map(|c| c.character().is_trivial().then(A::one)).collect();
        Ok(DeltaFunction { context, values })
    }

    /// Evaluate `f` on the canonical member of each class.
    pub fn from_fn(g: &Group, n: &Subgroup, f: impl Fn(&Character) -> A) -> Result<Self, ExtendError> {
        let mut delta = Self::partial(g, n)?;
        for i in 0..delta.values.len() {
            let chi = delta.context.classes()[i].character().clone();
            delta.set(&chi, f(&chi))?;
        }
        Ok(delta)
    }

    pub fn constant_one(g: &Group, n: &Subgroup) -> Result<Self, ExtendError> {
        Self::from_fn(g, n, |_| A::one())
    }

    pub fn group(&self) -> &Group {
        self.context.group()
    }

    pub fn lower(&self) -> &Subgroup {
        self.context.lower()
    }

    pub fn context(&self) -> &Arc<BrauerContext> {
        &self.context
    }

    pub fn classes(&self) -> &[PairClass] {
        self.context.classes()
    }

    fn index(&self, chi: &Character) -> Result<usize, ExtendError> {
        self.context.index_of(chi).ok_or_else(|| ExtendError::BelowLowerBound(chi.to_literal()))
    }

    /// Set Δ on the class of (H, χ).
    pub fn set(&mut self, chi: &Character, value: A) -> Result<(), ExtendError> {
        let i = self.index(chi)?;
        if chi.is_trivial() && !value.is_one() {
            return Err(ExtendError::TrivialNotOne(value.to_text(), chi.to_literal()));
        }
        self.values[i] = Some(value);
        Ok(())
    }

    pub fn value(&self, chi: &Character) -> Result<A, ExtendError> {
        let i = self.index(chi)?;
        self.values[i].clone().ok_or_else(|| ExtendError::MissingValue(chi.to_literal()))
    }

    /// Whether every class has a value.
    pub fn is_complete(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    /// Multiplicative evaluation on R₊(N ≤ Ω): Σ n[H, χ] ↦ ∏ Δ(H, χ)ⁿ.
    pub fn apply(&self, x: &RPlusElement) -> Result<A, ExtendError> {
        let mut acc = A::one();
        for (class, n) in x.terms() {
            acc = acc.mul(&self.value(class.character())?.pow(n));
        }
        Ok(acc)
    }

    /// Δ on R₁(N ∩ B ≤ B) for B ⊇ N, as a function on the embedded group.
    pub fn restrict_to(&self, emb: &Embedding) -> Result<Self, ExtendError> {
        let local = emb.group();
        let lower = emb.image(&self.lower().intersection(emb.top()));
        if !self.lower().is_subgroup_of(emb.top()) {
            return Err(ExtendError::OutOfRange);
        }
        let mut out = Self::partial(local, &lower)?;
        for class in out.context.classes().to_vec() {
            let chi = class.character();
            let lifted = chi.relabel(emb.preimage(chi.domain()));
            if let Ok(v) = self.value(&lifted) {
                out.set(chi, v)?;
            }
        }
        Ok(out)
    }

    /// Δ on R₁(≤ Ω/M) for a normal M ⊇ N, by precomposing with Ω → Ω/M.
    pub fn on_quotient(&self, quotient: &QuotientMap) -> Result<Self, ExtendError> {
        if !self.lower().is_subgroup_of(quotient.kernel()) {
            return Err(ExtendError::OutOfRange);
        }
        let local = quotient.group();
        let mut out = Self::partial(local, &local.trivial())?;
        for class in out.context.classes().to_vec() {
            let chi = class.character();
            if let Ok(v) = self.value(&inflate_character(quotient, chi)) {
                out.set(chi, v)?;
            }
        }
        Ok(out)
    }

    /// Delta-file text: `elements | exponents | value` per class.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (class, value) in self.context.classes().iter().zip(&self.values) {
            let Some(v) = value else { continue };
            let chi = class.character();
            let e: Vec<String> = chi.domain().elements().iter().map(|x| x.to_string()).collect();
            let k: Vec<String> = chi.exponents().iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "{} | {} | {}", e.join(" "), k.join(" "), v.to_text());
        }
        out
    }

    /// Parse delta-file text; lines starting with `#` are comments.
    pub fn parse(text: &str, g: &Group, n: &Subgroup) -> Result<Self, ExtendError> {
        let mut out = Self::partial(g, n)?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |m: &str| ExtendError::Parse(format!("line {}: {m}", lineno + 1));
            let parts: Vec<&str> = line.split('|').collect();
            let [elems, exps, value] = parts.as_slice() else { return Err(err("expected three fields")) };
            let elems: Vec<Elem> =
                elems.split_whitespace().map(str::parse).collect::<Result<_, _>>().map_err(|_| err("bad element"))?;
            let exps: Vec<u32> =
                exps.split_whitespace().map(str::parse).collect::<Result<_, _>>().map_err(|_| err("bad exponent"))?;
            let h = g.subgroup(&elems).map_err(|e| err(&e.to_string()))?;
            let chi = Character::from_exponents(g, &h, exps).map_err(|e| err(&e.to_string()))?;
            let v = A::parse_text(value).map_err(|e| err(&e))?;
            out.set(&chi, v)?;
        }
        Ok(out)
    }
}
