mod common;

use common::*;
use extend_engine::{
    check_condition_i, check_condition_ii, check_condition_iii, check_conditions, DeltaFunction, FreeAbelian,
    RelationKind, ValueGroup,
};
use group_core::exec::Strategy;

const SEQ: Strategy = Strategy::Sequential;

#[test]
fn constant_one_passes_everything() {
    for g in groups_up_to(24) {
        for n in g.normal_subgroups() {
            let delta = DeltaFunction::<FreeAbelian>::constant_one(&g, &n).unwrap();
            assert!(check_conditions(&delta, Strategy::default()).unwrap().is_empty());
        }
    }
}

#[test]
fn extendible_functions_pass_everything() {
    for g in groups_up_to(24) {
        for n in g.normal_subgroups() {
            assert!(check_conditions(&free_oracle(&g, &n), SEQ).unwrap().is_empty(), "{:?}", g.name());
            for x in g.class_reps() {
                let v = check_conditions(&transfer_oracle(&g, &n, x), SEQ).unwrap();
                assert!(v.is_empty(), "{:?} at {x}: {}", g.name(), v[0].summary());
            }
        }
    }
}

#[test]
fn no_heisenberg_configurations_give_a_vacuous_pass() {
    for name in ["C2", "C4", "C2xC2", "C6", "S3", "C3xC3"] {
        let g = group(name);
        let delta = generic_symbols(&g, &g.trivial());
        assert!(check_condition_ii(&delta, SEQ).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn nilpotent_groups_have_no_type_iii_configurations() {
    for name in ["C8", "D4", "Q8", "C2xC2", "Heis27", "C16"] {
        let g = group(name);
        let delta = generic_symbols(&g, &g.trivial());
        assert!(check_condition_iii(&delta, SEQ).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn d4_heisenberg_pairs_with_distinct_symbols_are_reported() {
    let g = group("D4");
    let n = g.trivial();
    let mut delta = free_oracle(&g, &n);
    // the three subgroups of order 4, each with a character not trivial on the centre
    let centre = g.center();
    let mut k = 0;
    for h in g.subgroups().iter().filter(|h| h.order() == 4) {
        for chi in char_core::characters_of(&g, h) {
            if !chi.is_trivial_on(&centre) {
                delta.set(&chi, FreeAbelian::symbol(&format!("h{k}"))).unwrap();
            }
        }
        k += 1;
    }
    let v = check_condition_ii(&delta, SEQ).unwrap();
    assert!(!v.is_empty());
    assert!(v.iter().all(|x| x.kind == RelationKind::II));
}

#[test]
fn generic_symbols_violate_a_condition() {
    for name in ["C4", "S3", "D4", "C6", "A4", "C2xC2"] {
        let g = group(name);
        let delta = generic_symbols(&g, &g.trivial());
        assert!(!check_conditions(&delta, SEQ).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn c4_free_symbols_fail_at_the_faithful_character() {
    let g = group("C4");
    let delta = generic_symbols(&g, &g.trivial());
    let c2 = g.generated(&[2]);
    let v = check_condition_i(&delta, SEQ).unwrap();
    // s(C2, sgn)·s(C4, −1) against s(C4, i)·s(C4, −i), once for each faithful χ
    assert_eq!(v.len(), 2);
    let chars = char_core::characters_of(&g, &g.whole());
    let faithful: Vec<_> = chars.iter().filter(|c| c.order() == 4).collect();
    let square = chars.iter().find(|c| c.order() == 2).unwrap();
    let sgn = faithful[0].restrict(&g, &c2);
    let left = delta.value(&sgn).unwrap().mul(&delta.value(square).unwrap());
    let right = delta.value(faithful[0]).unwrap().mul(&delta.value(faithful[1]).unwrap());
    for x in &v {
        assert_eq!(x.b, g.whole());
        assert!(x.witness.starts_with(&format!("K={:?}", c2.elements())));
        assert_eq!((&x.left, &x.right), (&left, &right));
    }
}

#[test]
fn on_groups_of_prime_order_every_function_passes() {
    // Δ(K, χ_K) = Δ(1, 1) = 1 and both sides are the product of all Δ(B, μ)
    for name in ["C2", "C3", "C5", "C7"] {
        let g = group(name);
        let delta = generic_symbols(&g, &g.trivial());
        assert!(check_conditions(&delta, SEQ).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn missing_values_are_reported() {
    let g = group("S3");
    let delta = DeltaFunction::<FreeAbelian>::partial(&g, &g.trivial()).unwrap();
    assert!(matches!(check_condition_i(&delta, SEQ), Err(extend_engine::ExtendError::MissingValue(_))));
}

#[test]
fn strategies_report_the_same_violations() {
    let g = group("S4");
    let delta = generic_symbols(&g, &g.trivial());
    let a: Vec<String> = check_conditions(&delta, Strategy::Sequential).unwrap().iter().map(|v| v.summary()).collect();
    let b: Vec<String> = check_conditions(&delta, Strategy::Parallel).unwrap().iter().map(|v| v.summary()).collect();
    assert_eq!(a, b);
}

#[test]
fn passing_is_inherited_by_subgroups_and_quotients() {
    for g in groups_up_to(24) {
        for x in g.class_reps() {
            let delta = transfer_oracle(&g, &g.trivial(), x);
            assert!(check_conditions(&delta, SEQ).unwrap().is_empty());
            for b in g.lattice().class_reps() {
                let local = delta.restrict_to(&g.embed(b)).unwrap();
                assert!(check_conditions(&local, SEQ).unwrap().is_empty(), "{:?} B={:?}", g.name(), b.elements());
            }
            for m in g.normal_subgroups() {
                let q = g.quotient(&m).unwrap();
                let down = delta.on_quotient(&q).unwrap();
                assert!(down.is_complete());
                assert!(check_conditions(&down, SEQ).unwrap().is_empty(), "{:?} M={:?}", g.name(), m.elements());
            }
        }
    }
}

#[test]
fn free_oracle_violation_free_with_nontrivial_lower_bound() {
    let g = group("S4");
    for n in g.normal_subgroups() {
        let delta = free_oracle(&g, &n);
        assert!(check_conditions(&delta, SEQ).unwrap().iter().all(|v| v.left == v.right));
        assert!(delta.is_complete());
        assert!(delta.value(&char_core::Character::trivial(&g, &g.whole())).unwrap().is_one());
    }
}
