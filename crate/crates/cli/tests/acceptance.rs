//! One line per acceptance criterion.  A criterion that cannot hold as
//! stated prints FAIL with its reason and is listed in `ALLOWED_FAILURES`;
//! every other FAIL fails the test.

mod common;

use std::io::Write;
use std::time::Instant;

use brauer_ring::{brauer_map, dim0_element, dim0_presentation, projector_phi, BrauerContext, PivotRule};
use char_core::{character_table, characters_of, ClassFunction};
use cli::checks::{extend_lines, tower_lines, type3_scan, Settings};
use cli::Verdict;
use common::{catalog_groups, random_element, rng};
use extend_engine::{check_conditions, extend, DeltaFunction, ExtendError, ExtendOptions, FreeAbelian};
use group_core::exec::{self, Strategy};
use group_core::{catalog, Group};
use relations::verify_kernel_span;
use tame_arith::{
    check_dh_i, check_dh_iii_tame, conductor_inductivity, functional_equation, gauss_sum, prime_power,
    AdditiveCharacter, FiniteField, GaloisModel, MultiplicativeCharacter, Realization, TameField,
};
use type3::is_type_iii;

/// The free-abelian negative control on C2 cannot be refused: on a group of
/// prime order both sides of every condition are the product of all values,
/// and the kernel of the Brauer map is spanned by one relation on which any
/// Δ·λ is 1.  So every function on pairs of C2 is extendible.
const ALLOWED_FAILURES: &[(&str, &str)] = &[("extension engine", "negative control C2")];

struct Outcome {
    name: &'static str,
    detail: String,
    failures: Vec<String>,
}

impl Outcome {
    fn new(name: &'static str, detail: String, failures: Vec<String>) -> Outcome {
        Outcome { name, detail, failures }
    }

    fn allowed(&self) -> bool {
        !self.failures.is_empty()
            && self.failures.iter().all(|f| ALLOWED_FAILURES.iter().any(|(n, p)| *n == self.name && f.starts_with(p)))
    }
}

fn all_catalog() -> Vec<Group> {
    catalog::entries().iter().map(|e| e.build()).collect()
}

fn label(g: &Group) -> &str {
    g.name().unwrap_or("?")
}

fn kernel_equality() -> Outcome {
    let groups = catalog_groups(27);
    let results = exec::map(Strategy::Parallel, &groups, |g| {
        let mut failures = Vec::new();
        let normals = g.normal_subgroups();
        for n in &normals {
            match verify_kernel_span(g, n) {
                Ok(r) if r.equal => {}
                Ok(r) => failures.push(format!("{} N={:?} kernel {} span {}", label(g), n.elements(), r.kernel_rank, r.span_rank)),
                Err(e) => failures.push(format!("{} N={:?}: {e}", label(g), n.elements())),
            }
        }
        (normals.len(), failures)
    });
    let pairs: usize = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    Outcome::new("kernel equality", format!("{} groups of order <= 27, {pairs} normal subgroups", groups.len()), failures)
}

fn brauer_presentations() -> Outcome {
    let groups = all_catalog();
    let results = exec::map(Strategy::Parallel, &groups, |g| {
        let mut failures = Vec::new();
        let mut count = 0;
        let table = character_table(g).unwrap();
        for n in g.normal_subgroups() {
            let d = g.derived_subgroup(&n);
            for rho in table.irreducibles().iter().filter(|r| r.is_trivial_on(&d)) {
                for rule in [PivotRule::SmallestRowMajor, PivotRule::SmallestReverse] {
                    count += 1;
                    match BrauerContext::shared(g, &n).and_then(|ctx| ctx.presentation(rho, rule)) {
                        Ok(x) if &brauer_map(&x) == rho && x.with_lower(&n).is_ok() => {}
                        Ok(_) => failures.push(format!("{} N={:?} {rule:?}: wrong image", label(g), n.elements())),
                        Err(e) => failures.push(format!("{} N={:?} {rule:?}: {e}", label(g), n.elements())),
                    }
                }
            }
        }
        let one = ClassFunction::trivial(g);
        let mut rng = rng(0x4272 + g.order() as u64);
        for _ in 0..20 {
            let phi = brauer_map(&random_element(g, &mut rng));
            let rho = phi.sub(&one.scale(phi.degree_int().unwrap() as i64));
            let ok = dim0_presentation(&rho, &g.trivial())
                .and_then(|cert| {
                    let valid = cert.iter().all(|(c, _)| !c.character().is_trivial());
                    Ok(valid && brauer_map(&dim0_element(g, &g.trivial(), &cert)?) == rho)
                })
                .unwrap_or(false);
            count += 1;
            if !ok {
                failures.push(format!("{}: dimension-0 presentation", label(g)));
            }
        }
        (count, failures)
    });
    let mut failures: Vec<String> = Vec::new();
    let s3 = catalog::by_name("S3").unwrap();
    let std = character_table(&s3).unwrap().irreducibles()[2].clone();
    let rho = std.sub(&ClassFunction::trivial(&s3).scale(2));
    let s3_ok = dim0_presentation(&rho, &s3.trivial())
        .and_then(|cert| dim0_element(&s3, &s3.trivial(), &cert))
        .is_ok_and(|x| brauer_map(&x) == rho);
    if !s3_ok {
        failures.push("S3 std - 2*1".into());
    }
    let count: usize = results.iter().map(|r| r.0).sum();
    failures.extend(results.into_iter().flat_map(|r| r.1));
    Outcome::new("brauer presentations", format!("{} groups, {count} presentations, S3 std-2*1", groups.len()), failures)
}

fn projector_laws() -> Outcome {
    let groups = all_catalog();
    let results = exec::map(Strategy::Parallel, &groups, |g| {
        let normals: Vec<_> = g.normal_subgroups().into_iter().filter(|c| g.subgroup_is_abelian(c)).collect();
        let linear = characters_of(g, &g.whole());
        let mut rng = rng(0x5052 + g.order() as u64);
        let mut failures = Vec::new();
        for c in &normals {
            for i in 0..200 {
                let x = random_element(g, &mut rng);
                let p = projector_phi(&x, c).unwrap();
                let eta = &linear[i % linear.len()];
                let mut ok = p.with_lower(c).is_ok()
                    && projector_phi(&p, c).unwrap() == p
                    && brauer_map(&p) == brauer_map(&x)
                    && projector_phi(&x.twist(eta), c).unwrap() == p.twist(eta);
                for big in normals.iter().filter(|d| c.is_subgroup_of(d)) {
                    ok &= projector_phi(&p, big).unwrap() == projector_phi(&x, big).unwrap();
                }
                if !ok {
                    failures.push(format!("{} C={:?} sample {i}", label(g), c.elements()));
                }
            }
        }
        (normals.len(), failures)
    });
    let pairs: usize = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    Outcome::new("projector laws", format!("{pairs} (group, C) pairs x 200 elements"), failures)
}

fn generic_symbols(g: &Group) -> DeltaFunction<FreeAbelian> {
    let mut delta = DeltaFunction::partial(g, &g.trivial()).unwrap();
    for (i, class) in delta.classes().to_vec().iter().enumerate() {
        let chi = class.character();
        if !chi.is_trivial() {
            delta.set(chi, FreeAbelian::symbol(&format!("d{i}"))).unwrap();
        }
    }
    delta
}

/// `None` when Δ is refused with a cited relation.
fn refusal(g: &Group) -> Result<String, String> {
    let delta = generic_symbols(g);
    let violations = check_conditions(&delta, Strategy::Sequential).map_err(|e| e.to_string())?;
    match extend(&delta, ExtendOptions::default()) {
        Err(ExtendError::ConditionsViolated { kind, witness }) if !violations.is_empty() => Ok(format!("type {kind} {witness}")),
        Err(e) => Err(format!("refused without a cited relation: {e}")),
        Ok(_) => Err("accepted: every function on pairs of a group of prime order is extendible".into()),
    }
}

fn extension_engine() -> Outcome {
    let settings = Settings::default();
    let models = [
        GaloisModel::Metacyclic { q: 2, ell: 3 },
        GaloisModel::Unramified { q: 2, degree: 2 },
        GaloisModel::Unramified { q: 2, degree: 3 },
        GaloisModel::Unramified { q: 5, degree: 2 },
        GaloisModel::Unramified { q: 4, degree: 3 },
    ];
    let mut failures = Vec::new();
    let mut lines = 0;
    for model in models {
        for level in [0, 1] {
            let target = format!("{model:?} level {level}");
            let delta = match Realization::new(model, level).and_then(|r| r.delta()) {
                Ok(d) => d,
                Err(e) => {
                    failures.push(format!("{target}: {e}"));
                    continue;
                }
            };
            let mut out = extend_lines(&target, &delta, &settings);
            out.extend(tower_lines(&target, &delta));
            for check in ["conditions", "extend", "uniqueness", "lambda", "towers"] {
                if !out.iter().any(|l| l.check == check && l.verdict == Verdict::Pass) {
                    failures.push(format!("{target}: {check}"));
                }
            }
            failures.extend(out.iter().filter(|l| l.verdict != Verdict::Pass).map(|l| l.to_string()));
            lines += out.len();
        }
    }
    let c4 = refusal(&catalog::by_name("C4").unwrap());
    if let Err(e) = &c4 {
        failures.push(format!("supplementary control C4 {e}"));
    }
    if let Err(e) = refusal(&catalog::by_name("C2").unwrap()) {
        failures.push(format!("negative control C2 {e}"));
    }
    let detail = format!(
        "{} model instances, {lines} checks; C4 free symbols refused: {}",
        models.len() * 2,
        c4.unwrap_or_else(|e| e)
    );
    Outcome::new("extension engine", detail, failures)
}

fn prime_powers_up_to(max: u64) -> Vec<u64> {
    (2..=max).filter(|&q| prime_power(q).is_ok()).collect()
}

fn gauss_layer() -> Outcome {
    let fields = prime_powers_up_to(64);
    let per_field = exec::map(Strategy::Parallel, &fields, |&q| {
        let mut failures = Vec::new();
        let f = FiniteField::of_order(q).unwrap();
        let mut gauss = 0;
        for s in 1..q as i64 - 1 {
            gauss += 1;
            let g = gauss_sum(&f, MultiplicativeCharacter::new(&f, s), AdditiveCharacter::STANDARD);
            if g.abs_squared() != char_core::Cyclotomic::from_int(q as i128) {
                failures.push(format!("|g|^2 q={q} s={s}"));
            }
        }
        let mut equations = 0;
        for level in [0, 1] {
            let base = TameField::base(q, level).unwrap();
            let chars = base.characters(12);
            equations += chars.len();
            let holds = exec::map(Strategy::Parallel, &chars, |chi| functional_equation(chi).holds());
            for (chi, ok) in chars.iter().zip(holds) {
                if !ok {
                    failures.push(format!("functional equation q={q} level={level} {chi:?}"));
                }
            }
        }
        (gauss, equations, failures)
    });
    let gauss: usize = per_field.iter().map(|r| r.0).sum();
    let equations: usize = per_field.iter().map(|r| r.1).sum();
    let mut failures: Vec<String> = per_field.into_iter().flat_map(|r| r.2).collect();
    let mut dh1 = 0;
    for q in prime_powers_up_to(16) {
        for level in [0, 1] {
            let base = TameField::base(q, level).unwrap();
            for ell in [2u64, 3, 5] {
                let mut fields = vec![base.extension(1, ell as u32).unwrap()];
                if ell != base.p() && (q - 1) % ell == 0 {
                    fields.push(base.extension(ell, 1).unwrap());
                    fields.push(base.extension_with_unit(ell, 1, 1).unwrap());
                }
                for k in &fields {
                    for chi in base.characters(2 * ell) {
                        dh1 += 1;
                        if !check_dh_i(k, &chi).is_ok_and(|r| r.holds()) {
                            failures.push(format!("DH I q={q} ell={ell} {k:?} {chi:?}"));
                        }
                    }
                }
            }
        }
    }
    let mut dh3 = 0;
    for (q, ell) in [(2, 3), (3, 5), (2, 7), (5, 3)] {
        for level in [0, 1] {
            let base = TameField::base(q, level).unwrap();
            for chi in base.characters(2 * ell) {
                dh3 += 1;
                match check_dh_iii_tame(&base, ell, &chi) {
                    Ok(r) if r.holds() && ((q, ell) != (2, 7) || r.odd.is_some()) => {}
                    Ok(r) => failures.push(format!("DH III {}", r.instance)),
                    Err(e) => failures.push(format!("DH III q={q} ell={ell}: {e}")),
                }
            }
        }
    }
    let mut grid = 0;
    for e in 1..=3 {
        for f in 1..=3 {
            for a_k in 0..=2 {
                for dim in 1..=2 {
                    for level in 0..=1 {
                        grid += 1;
                        if !conductor_inductivity(e, f, e - 1, a_k, dim, level).equal() {
                            failures.push(format!("conductor e={e} f={f} a={a_k} dim={dim} level={level}"));
                        }
                    }
                }
            }
        }
    }
    let detail = format!(
        "{gauss} Gauss sums over {} fields, {equations} functional equations, {dh1} DH I, {dh3} DH III, {grid} conductor cases",
        fields.len()
    );
    Outcome::new("gauss layer", detail, failures)
}

fn type_three_suite() -> Outcome {
    let groups = all_catalog();
    let mut failures = Vec::new();
    let mut certified = 0;
    let mut maximal = 0;
    for g in &groups {
        let lines = type3_scan(label(g), g);
        failures.extend(lines.iter().filter(|l| l.verdict != Verdict::Pass).map(|l| l.to_string()));
        certified += lines.iter().filter(|l| l.detail.contains("all C-conjugate")).count();
        // the definitional test: certified iff the maximal subgroup is not normal
        for h in g.maximal_subgroups_of(&g.whole()) {
            maximal += 1;
            let accepted = is_type_iii(g, &h).is_ok_and(|c| !c.is_degenerate());
            if accepted == g.is_normal(&h) {
                failures.push(format!("{} H={:?}: certified {accepted}", label(g), h.elements()));
            }
        }
    }
    Outcome::new(
        "type-III suite",
        format!("{} groups, {maximal} maximal subgroups, {certified} certificates", groups.len()),
        failures,
    )
}

#[test]
fn acceptance() {
    let criteria: [fn() -> Outcome; 6] =
        [kernel_equality, brauer_presentations, projector_laws, extension_engine, gauss_layer, type_three_suite];
    let mut unexpected = Vec::new();
    // the harness has already written `test acceptance ... ` without a newline
    writeln!(std::io::stdout()).unwrap();
    for (i, criterion) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = criterion();
        let seconds = start.elapsed().as_secs_f64();
        let verdict = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        let mut line = format!("{verdict} [{}] {} :: {} ({seconds:.1}s)", i + 1, o.name, o.detail);
        if !o.failures.is_empty() {
            let shown: Vec<&str> = o.failures.iter().take(3).map(String::as_str).collect();
            line.push_str(&format!("; {} failures: {}", o.failures.len(), shown.join("; ")));
            if o.allowed() {
                line.push_str(" [allowed]");
            } else {
                unexpected.push(o.name);
            }
        }
        // straight to the handle: the harness does not capture it, so the
        // lines show in a plain `cargo test` run
        writeln!(std::io::stdout(), "{line}").unwrap();
    }
    assert!(unexpected.is_empty(), "unexpected failures in {unexpected:?}");
}
