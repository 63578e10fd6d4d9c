mod common;

use common::*;
use extend_engine::{FreeAbelian, LambdaEngine, LambdaOptions, ValueGroup};
use group_core::exec::Strategy;

#[test]
fn top_lambda_is_one() {
    for g in groups_up_to(12) {
        let n = g.trivial();
        let delta = generic_symbols(&g, &n);
        let engine = LambdaEngine::new(&delta);
        assert!(engine.lambda(&g.whole()).unwrap().is_one());
    }
}

#[test]
fn cyclic_of_prime_order_is_the_character_product() {
    for name in ["C2", "C3", "C5", "C7"] {
        let g = group(name);
        let delta = generic_symbols(&g, &g.trivial());
        let engine = LambdaEngine::new(&delta);
        let expected = char_core::characters_of(&g, &g.whole())
            .iter()
            .fold(FreeAbelian::one(), |acc, chi| acc.mul(&delta.value(chi).unwrap()));
        assert_eq!(engine.lambda(&g.trivial()).unwrap(), expected, "{name}");
    }
}

#[test]
fn free_oracle_lambda_is_index_minus_one() {
    for g in groups_up_to(24) {
        for n in g.normal_subgroups() {
            let delta = free_oracle(&g, &n);
            let engine = LambdaEngine::new(&delta);
            for a in subgroups_over(&g, &n) {
                for u in subgroups_over(&g, &n).iter().filter(|u| u.is_subgroup_of(&a)) {
                    let index = (a.order() / u.order()) as i64;
                    assert_eq!(engine.lambda_in(&a, u).unwrap(), s().pow(index - 1), "{:?}", g.name());
                }
            }
        }
    }
}

#[test]
fn transfer_oracle_lambda_is_a_coset_sign() {
    for g in groups_up_to(24) {
        let n = g.trivial();
        for x in g.class_reps() {
            let delta = transfer_oracle(&g, &n, x);
            let engine = LambdaEngine::new(&delta);
            for a in g.subgroups() {
                for u in g.subgroups().iter().filter(|u| u.is_subgroup_of(a)) {
                    assert_eq!(engine.lambda_in(a, u).unwrap(), transfer_lambda(&g, a, u, x), "{:?} at {x}", g.name());
                }
            }
        }
    }
}

#[test]
fn lambda_identities_hold_for_extendible_functions() {
    for g in groups_up_to(24) {
        for n in g.normal_subgroups() {
            let free = free_oracle(&g, &n);
            let violations = LambdaEngine::new(&free).verify_all().unwrap();
            assert!(violations.is_empty(), "{:?}: {:?}", g.name(), violations.first());
            for x in g.class_reps() {
                let delta = transfer_oracle(&g, &n, x);
                let violations = LambdaEngine::new(&delta).verify_all().unwrap();
                assert!(violations.is_empty(), "{:?} at {x}: {:?}", g.name(), violations.first());
            }
        }
    }
}

#[test]
fn abelian_product_holds_even_for_generic_symbols() {
    // for A/U of prime order the recursion takes C = A/U
    for g in groups_up_to(16) {
        let delta = generic_symbols(&g, &g.trivial());
        let engine = LambdaEngine::new(&delta);
        for a in g.subgroups() {
            for u in g.maximal_subgroups_of(a) {
                if g.is_normal_in(&u, a) {
                    let expected = char_core::characters_of(&g, a)
                        .iter()
                        .filter(|chi| chi.is_trivial_on(&u))
                        .fold(FreeAbelian::one(), |acc, chi| acc.mul(&delta.value(chi).unwrap()));
                    assert_eq!(engine.lambda_in(a, &u).unwrap(), expected);
                }
            }
        }
    }
}

#[test]
fn generic_symbols_break_the_tower_on_s3() {
    let g = group("S3");
    let delta = generic_symbols(&g, &g.trivial());
    let violations = LambdaEngine::new(&delta).verify_all().unwrap();
    assert!(!violations.is_empty());
}

#[test]
fn memo_and_strategy_do_not_change_values() {
    let g = group("S4");
    let delta = transfer_oracle(&g, &g.trivial(), 1);
    let base = LambdaEngine::new(&delta);
    let fresh = LambdaEngine::with_options(&delta, LambdaOptions { memo: false, strategy: Strategy::Sequential, ..Default::default() });
    for u in g.subgroups() {
        assert_eq!(base.lambda(u).unwrap(), fresh.lambda(u).unwrap());
    }
}

#[test]
fn relative_lambda_matches_direct_ambient() {
    let g = group("S4");
    let delta = free_oracle(&g, &g.trivial());
    let engine = LambdaEngine::new(&delta);
    let table = engine.table().unwrap();
    for (u, h, v) in table.entries() {
        assert_eq!(*v, engine.lambda_in(h, u).unwrap());
    }
    assert_eq!(table.len(), g.subgroups().iter().map(|h| g.subgroups().iter().filter(|u| u.is_subgroup_of(h)).count()).sum::<usize>());
}

#[test]
fn out_of_range_subgroups_are_refused() {
    let g = group("S3");
    let n = sub(&g, g.derived_subgroup(&g.whole()).elements());
    let delta = free_oracle(&g, &n);
    let engine = LambdaEngine::new(&delta);
    assert!(engine.lambda(&g.trivial()).is_err());
}
