//! The checks shared by subcommands and campaigns.  Each returns report
//! lines; module errors become failing lines naming the instance.

use brauer_ring::{PivotRule, RPlusElement};
use extend_engine::{check_conditions, extend, uniqueness_check, DeltaFunction, ExtendOptions, LambdaEngine, ValueGroup};
use group_core::exec::Strategy;
use group_core::{Group, Subgroup};
use relations::{verify_kernel_equality, Options, RelationKind};
use tame_arith::{check_dh_i_batch, check_dh_iii_batch, DhReport, TameError, TameField, TypeThreeSetup};
use type3::{certificate_h1, complements_census, scan, Type3Error};

use crate::report::{Line, Verdict};
use crate::target::elements_text;

#[derive(Clone, Debug)]
pub struct Settings {
    pub strategy: Strategy,
    pub kinds: Vec<RelationKind>,
    pub full_kernel: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { strategy: Strategy::Parallel, kinds: RelationKind::ALL.to_vec(), full_kernel: false }
    }
}

/// `2*[0 3|1] - 1*[0|0]` on one line.
pub fn element_inline(x: &RPlusElement) -> String {
    let terms: Vec<String> = x
        .terms()
        .map(|(class, n)| {
            let h: Vec<String> = class.subgroup().elements().iter().map(|e| e.to_string()).collect();
            let k: Vec<String> = class.character().exponents().iter().map(|e| e.to_string()).collect();
            format!("{n}*[{}|{}]", h.join(" "), k.join(" "))
        })
        .collect();
    if terms.is_empty() { "0".into() } else { terms.join(" + ") }
}

fn kinds_text(kinds: &[RelationKind]) -> String {
    kinds.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")
}

pub fn thm27(target: &str, g: &Group, normals: &[Subgroup], settings: &Settings) -> Vec<Line> {
    let options = Options { strategy: settings.strategy, ..Options::default() };
    normals
        .iter()
        .map(|n| {
            let instance = format!("N={} kinds={}", elements_text(n), kinds_text(&settings.kinds));
            match verify_kernel_equality(g, n, &settings.kinds, options) {
                Ok(r) => {
                    let count = |k: RelationKind| r.generators.iter().filter(|x| x.kind == k).count();
                    let mut detail = format!(
                        "dimension {} kernel rank {} span rank {} generators I:{} II:{} III:{}",
                        r.dimension,
                        r.kernel_rank,
                        r.span_rank,
                        count(RelationKind::I),
                        count(RelationKind::II),
                        count(RelationKind::III)
                    );
                    if let Some(x) = r.missing.first() {
                        detail.push_str(&format!(" missing {} e.g. {}", r.missing.len(), element_inline(x)));
                    }
                    Line::new(target, "thm2.7", instance, Line::pass_if(r.equal), detail)
                }
                Err(e) => Line::new(target, "thm2.7", instance, Verdict::Fail, format!("error: {e}")),
            }
        })
        .collect()
}

pub fn type3_scan(target: &str, g: &Group) -> Vec<Line> {
    if !g.is_solvable() {
        return vec![Line::new(target, "type3", "all", Verdict::Skip, "not solvable")];
    }
    scan(g)
        .into_iter()
        .map(|(h, result)| {
            let instance = format!("H={}", elements_text(&h));
            match result {
                Ok(cert) if cert.is_degenerate() => {
                    Line::new(target, "type3", instance, Verdict::Pass, format!("degenerate, prime order {}", cert.prime()))
                }
                Ok(cert) => {
                    let census = complements_census(&cert);
                    let h1 = certificate_h1(&cert);
                    match (census, h1) {
                        (Ok(c), Ok(z)) => {
                            let ok = c.all_c_conjugate && c.count_equals_order_c && z.is_trivial();
                            let detail = format!(
                                "core {} C {} ell {} complements {} all C-conjugate {} cocycles {} coboundaries {}",
                                elements_text(cert.core()),
                                elements_text(cert.complement()),
                                cert.prime(),
                                c.complements.len(),
                                c.all_c_conjugate,
                                z.cocycles,
                                z.coboundaries
                            );
                            Line::new(target, "type3", instance, Line::pass_if(ok), detail)
                        }
                        (Err(e), _) | (_, Err(e)) => Line::new(target, "type3", instance, Verdict::Fail, format!("error: {e}")),
                    }
                }
                Err(Type3Error::HNormal) => Line::new(target, "type3", instance, Verdict::Pass, "normal of prime index"),
                Err(e) => Line::new(target, "type3", instance, Verdict::Fail, format!("error: {e}")),
            }
        })
        .collect()
}

pub fn extend_lines<A: ValueGroup>(target: &str, delta: &DeltaFunction<A>, settings: &Settings) -> Vec<Line> {
    let instance = format!("N={}", elements_text(delta.lower()));
    let fail = |check: &str, msg: String| vec![Line::new(target, check, instance.clone(), Verdict::Fail, msg)];
    let violations = match check_conditions(delta, settings.strategy) {
        Ok(v) => v,
        Err(e) => return fail("conditions", format!("error: {e}")),
    };
    if let Some(v) = violations.first() {
        let detail = format!("{} violations; first {}: {}", violations.len(), v.kind, v.summary());
        return fail("conditions", detail);
    }
    let mut out = vec![Line::new(target, "conditions", instance.clone(), Verdict::Pass, "I, II, III hold")];
    let options = ExtendOptions { full_kernel: settings.full_kernel, strategy: settings.strategy, ..ExtendOptions::default() };
    let first = match extend(delta, options) {
        Ok(x) => x,
        Err(e) => {
            out.extend(fail("extend", format!("error: {e}")));
            return out;
        }
    };
    let scope = if first.checked_full_kernel() { "kernel basis and generators" } else { "generators" };
    out.push(Line::new(
        target,
        "extend",
        instance.clone(),
        Verdict::Pass,
        format!("certified on {} relations ({scope})", first.certified_relations()),
    ));
    let second = extend(delta, ExtendOptions { rule: PivotRule::SmallestReverse, ..options });
    let line = match second {
        Ok(second) => {
            Line::new(target, "uniqueness", instance, Line::pass_if(uniqueness_check(&first, &second)), "two pivot rules")
        }
        Err(e) => Line::new(target, "uniqueness", instance, Verdict::Fail, format!("error: {e}")),
    };
    out.push(line);
    out
}

pub fn tower_lines<A: ValueGroup>(target: &str, delta: &DeltaFunction<A>) -> Vec<Line> {
    let instance = format!("N={}", elements_text(delta.lower()));
    let engine = LambdaEngine::new(delta);
    let results = [("lambda", engine.verify_all()), ("towers", engine.verify_tower())];
    results
        .into_iter()
        .map(|(check, r)| match r {
            Ok(v) if v.is_empty() => Line::new(target, check, instance.clone(), Verdict::Pass, "all chains"),
            Ok(v) => Line::new(
                target,
                check,
                instance.clone(),
                Verdict::Fail,
                format!("{} violations; first {:?} {}: {} != {}", v.len(), v[0].property, v[0].description, v[0].left.to_text(), v[0].right.to_text()),
            ),
            Err(e) => Line::new(target, check, instance.clone(), Verdict::Fail, format!("error: {e}")),
        })
        .collect()
}

fn dh_line(target: &str, check: &str, r: &DhReport) -> Line {
    let mut detail = format!("lhs {} rhs {}", r.full.lhs.to_literal(), r.full.rhs.to_literal());
    if let Some(odd) = &r.odd {
        detail.push_str(&format!(" odd {}", if odd.holds() { "equal" } else { "differs" }));
    }
    Line::new(target, check, r.instance.clone(), Line::pass_if(r.holds()), detail)
}

/// The abelian prime-degree extensions of degree ℓ over F_q: unramified,
/// and totally ramified when ℓ | q − 1.
pub fn dh1(target: &str, q: u64, ell: u64, level: i64, ramified_only: bool, settings: &Settings) -> Vec<Line> {
    let instance = format!("q={q} ell={ell} level={level}");
    let fail = |e: TameError| vec![Line::new(target, "dh1", instance.clone(), Verdict::Fail, format!("error: {e}"))];
    let base = match TameField::base(q, level) {
        Ok(b) => b,
        Err(e) => return fail(e),
    };
    let mut fields = Vec::new();
    if !ramified_only {
        fields.push(base.extension(1, ell as u32));
    }
    if ell != base.p() && (q - 1).is_multiple_of(ell) {
        fields.push(base.extension(ell, 1));
    } else if ramified_only {
        return vec![Line::new(target, "dh1", instance, Verdict::Skip, "no tame abelian ramified extension of this degree")];
    }
    let chars = base.characters(2 * ell);
    let mut out = Vec::new();
    for k in fields {
        match k.and_then(|k| check_dh_i_batch(&k, &chars, settings.strategy)) {
            Ok(reports) => out.extend(reports.iter().map(|r| dh_line(target, "dh1", r))),
            Err(e) => out.extend(fail(e)),
        }
    }
    out
}

pub fn dh3(target: &str, q: u64, ell: u64, level: i64, settings: &Settings) -> Vec<Line> {
    let instance = format!("q={q} ell={ell} level={level}");
    let setup = TameField::base(q, level).and_then(|b| TypeThreeSetup::new(&b, ell));
    match setup {
        Ok(setup) => {
            let chars = setup.base.characters(2 * ell);
            match check_dh_iii_batch(&setup, &chars, settings.strategy) {
                Ok(reports) => reports.iter().map(|r| dh_line(target, "dh3", r)).collect(),
                Err(e) => vec![Line::new(target, "dh3", instance, Verdict::Fail, format!("error: {e}"))],
            }
        }
        Err(TameError::DegenerateCase(m)) => vec![Line::new(target, "dh3", instance, Verdict::Skip, m)],
        Err(e) => vec![Line::new(target, "dh3", instance, Verdict::Fail, format!("error: {e}"))],
    }
}
