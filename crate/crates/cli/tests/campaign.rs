mod common;

use std::path::Path;

use cli::campaign::{self, LoadedDelta};
use cli::checks::Settings;
use cli::target::NormalSelector;
use cli::{Campaign, Check, CliError, TargetSpec, Verdict};
use extend_engine::{DeltaFunction, FreeAbelian, ValueGroup};
use group_core::catalog;
use group_core::exec::Strategy;
use tame_arith::{GaloisModel, Realization};

fn run_text(text: &str, strategy: Strategy) -> cli::Report {
    let c = Campaign::parse(text).unwrap();
    let targets = c.resolve(Path::new(".")).unwrap();
    campaign::run(&targets, &c.checks, &Settings { strategy, ..Settings::default() })
}

#[test]
fn parses_targets_checks_and_output() {
    let text = "\
# a campaign
target S3 N=e   # inline comment
target D4 N=#1
target model=s3 level=-1
target q=2 ell=3
check thm2.7 type3
check dh3 thm27
output out/report.txt
";
    let c = Campaign::parse(text).unwrap();
    assert_eq!(c.checks, vec![Check::Thm27, Check::Type3, Check::Dh3]);
    assert_eq!(c.output.as_deref(), Some(Path::new("out/report.txt")));
    let specs: Vec<&TargetSpec> = c.targets.iter().map(|(_, t)| t).collect();
    assert_eq!(specs[0], &TargetSpec::Group { name: "S3".into(), normal: NormalSelector::Trivial, delta: None });
    assert_eq!(specs[1], &TargetSpec::Group { name: "D4".into(), normal: NormalSelector::Index(1), delta: None });
    assert_eq!(specs[2], &TargetSpec::Model { model: GaloisModel::Metacyclic { q: 2, ell: 3 }, level: -1 });
    assert_eq!(specs[3], &TargetSpec::Tame { q: 2, ell: 3, level: 0 });
    assert_eq!(c.targets.iter().map(|t| t.0).collect::<Vec<_>>(), vec![2, 3, 4, 5]);
}

#[test]
fn parse_errors_name_the_line() {
    for (text, line) in [
        ("check thm2.7\nfrobnicate\n", 2),
        ("target S3 N=e N=G\n", 1),
        ("\n\ntarget q=2\n", 3),
        ("target q=2 ell=x\n", 1),
        ("check nope\n", 1),
        ("target S3 D4\n", 1),
        ("target model=cubic:2:3\n", 1),
        ("target S3 N=oops\n", 1),
        ("target q=2 ell=3 extra\n", 1),
        ("output a b\n", 1),
    ] {
        match Campaign::parse(text) {
            Err(CliError::Campaign { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn resolution_errors_name_the_line() {
    let c = Campaign::parse("target S3\ntarget NoSuchGroup\n").unwrap();
    assert!(matches!(c.resolve(Path::new(".")), Err(CliError::Campaign { line: 2, .. })));
    let c = Campaign::parse("target S3 N=0,3\n").unwrap();
    assert!(matches!(c.resolve(Path::new(".")), Err(CliError::Campaign { line: 1, .. })));
    let c = Campaign::parse("target model=metacyclic:7:3\n").unwrap();
    assert!(matches!(c.resolve(Path::new(".")), Err(CliError::Campaign { line: 1, .. })));
}

#[test]
fn empty_campaign_gives_an_empty_passing_report() {
    let r = run_text("# nothing\n\n", Strategy::Parallel);
    assert!(r.lines.is_empty());
    assert!(r.passed());
    assert_eq!(r.render(), "");
}

#[test]
fn s3_kernel_has_rank_four() {
    let r = run_text("target S3 N=e\ncheck thm2.7\n", Strategy::Parallel);
    assert_eq!(r.lines.len(), 1);
    let line = &r.lines[0];
    assert_eq!(line.verdict, Verdict::Pass);
    assert!(line.detail.contains("kernel rank 4 span rank 4"), "{}", line.detail);
}

#[test]
fn type_iii_tame_instance_passes() {
    let r = run_text("target q=2 ell=3\ncheck dh3\n", Strategy::Sequential);
    // χ(π) ∈ μ₆ and the trivial residue character: six instances
    assert_eq!(r.count(Verdict::Pass), 6);
    assert!(r.passed());
}

#[test]
fn checks_that_do_not_apply_are_skipped() {
    let r = run_text("target q=7 ell=3\ntarget S3\ncheck dh3 extend\n", Strategy::Sequential);
    let verdicts: Vec<Verdict> = r.lines.iter().map(|l| l.verdict).collect();
    assert_eq!(verdicts, vec![Verdict::Skip; 4]);
    assert!(r.passed());
}

#[test]
fn reports_are_deterministic_across_strategies() {
    let text = "target S3 N=all\ntarget model=unramified:2:3\ntarget q=3 ell=2 level=1\ncheck thm2.7 type3 extend towers dh1\n";
    let a = run_text(text, Strategy::Sequential).render();
    let b = run_text(text, Strategy::Parallel).render();
    assert_eq!(a, b);
    assert_eq!(a, run_text(text, Strategy::Parallel).render());
    // ordered by target, then by check
    let targets: Vec<&str> = a.lines().map(|l| l.split(" thm2.7").next().unwrap()).collect();
    assert!(targets[0].starts_with("PASS S3"));
    assert!(a.lines().last().unwrap().contains("q=3 ell=2 level=1"));
}

#[test]
fn delta_files_are_read_as_root_numbers_or_free_symbols() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = catalog::by_name("S3").unwrap();
    let roots = Realization::new(GaloisModel::Metacyclic { q: 2, ell: 3 }, 0).unwrap().delta().unwrap();
    std::fs::write(dir.path().join("s3.delta"), roots.to_text()).unwrap();
    assert!(matches!(LoadedDelta::parse(&roots.to_text(), &s3, &s3.trivial()).unwrap(), LoadedDelta::Root(_)));
    let c2 = catalog::by_name("C2").unwrap();
    let free = DeltaFunction::<FreeAbelian>::from_fn(&c2, &c2.trivial(), |chi| {
        if chi.is_trivial() { FreeAbelian::one() } else { FreeAbelian::symbol("s") }
    })
    .unwrap();
    std::fs::write(dir.path().join("c2.delta"), free.to_text()).unwrap();
    let text = "target S3 delta=s3.delta\ntarget C2 delta=c2.delta\ncheck extend towers\n";
    let c = Campaign::parse(text).unwrap();
    let targets = c.resolve(dir.path()).unwrap();
    let r = campaign::run(&targets, &c.checks, &Settings::default());
    assert_eq!(r.count(Verdict::Pass), 10, "{}", r.render());
    // generic symbols on A4 fail conditions, with a cited relation
    let a4 = catalog::by_name("A4").unwrap();
    let mut generic = DeltaFunction::<FreeAbelian>::partial(&a4, &a4.trivial()).unwrap();
    for (i, class) in generic.classes().to_vec().iter().enumerate() {
        if !class.character().is_trivial() {
            generic.set(class.character(), FreeAbelian::symbol(&format!("x{i}"))).unwrap();
        }
    }
    std::fs::write(dir.path().join("a4.delta"), generic.to_text()).unwrap();
    let c = Campaign::parse("target A4 delta=a4.delta\ncheck extend\n").unwrap();
    let r = campaign::run(&c.resolve(dir.path()).unwrap(), &c.checks, &Settings::default());
    assert!(!r.passed());
    assert_eq!(r.lines.len(), 1);
    assert_eq!(r.lines[0].check, "conditions");
    assert!(r.lines[0].detail.contains("violations; first"), "{}", r.lines[0].detail);
}

#[test]
fn a_delta_file_needs_a_single_normal_subgroup() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("x.delta"), "").unwrap();
    let c = Campaign::parse("target S3 N=all delta=x.delta\n").unwrap();
    assert!(matches!(c.resolve(dir.path()), Err(CliError::Campaign { line: 1, .. })));
    let c = Campaign::parse("target S3 delta=missing.delta\n").unwrap();
    assert!(c.resolve(dir.path()).is_err());
}
