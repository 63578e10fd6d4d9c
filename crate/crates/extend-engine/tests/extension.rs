mod common;

use brauer_ring::{induce_element, PivotRule, RPlusElement};
use char_core::{characters_of, induce, ClassFunction};
use common::*;
use extend_engine::{extend, uniqueness_check, DeltaFunction, ExtendError, ExtendOptions, Extension, FreeAbelian, ValueGroup};
use group_core::exec::Strategy;

fn seq() -> ExtendOptions {
    ExtendOptions { strategy: Strategy::Sequential, ..Default::default() }
}

#[test]
fn free_oracle_extends_with_the_expected_values() {
    for g in groups_up_to(24) {
        for n in g.normal_subgroups() {
            let ext = extend(&free_oracle(&g, &n), seq()).unwrap();
            for h in subgroups_over(&g, &n) {
                for rho in ext.local_irreducibles(&h).unwrap() {
                    let dim = rho.degree_int().unwrap() as i64;
                    let trivial = rho.inner_int(&ClassFunction::trivial(rho.group())).unwrap() as i64;
                    assert_eq!(ext.evaluate(&h, &rho).unwrap(), s().pow(dim - trivial), "{:?}", g.name());
                }
            }
        }
    }
}

#[test]
fn trivial_representation_maps_to_one() {
    for g in groups_up_to(24) {
        let ext = extend(&transfer_oracle(&g, &g.trivial(), g.order() - 1), seq()).unwrap();
        assert!(ext.evaluate(&g.whole(), &ClassFunction::trivial(&g)).unwrap().is_one());
    }
}

#[test]
fn induced_characters_pick_up_lambda() {
    for g in groups_up_to(24) {
        for x in g.class_reps() {
            let ext = extend(&transfer_oracle(&g, &g.trivial(), x), seq()).unwrap();
            for u in g.lattice().class_reps() {
                for chi in characters_of(&g, u) {
                    let rho = induce(&chi, &g).unwrap();
                    let expected = ext.delta().value(&chi).unwrap().mul(&ext.lambda_omega(u).unwrap());
                    assert_eq!(ext.evaluate(&g.whole(), &rho).unwrap(), expected);
                }
            }
        }
    }
}

#[test]
fn induction_inside_a_subgroup() {
    let g = group("S4");
    let ext = extend(&transfer_oracle(&g, &g.trivial(), 1), seq()).unwrap();
    for h in g.subgroups() {
        let emb = g.embed(h);
        for u in g.subgroups().iter().filter(|u| u.is_subgroup_of(h)) {
            for chi in characters_of(&g, u) {
                let local_chi = chi.relabel(emb.image(u));
                let rho = induce(&local_chi, emb.group()).unwrap();
                let expected = ext.delta().value(&chi).unwrap().mul(&ext.lambda(u, h).unwrap());
                let rho_on = if *h == g.whole() { induce(&chi, &g).unwrap() } else { rho };
                assert_eq!(ext.evaluate(h, &rho_on).unwrap(), expected);
            }
        }
    }
}

#[test]
fn brauer_four_route_agrees() {
    for g in groups_up_to(24) {
        for n in g.normal_subgroups() {
            for x in g.class_reps() {
                let ext = extend(&transfer_oracle(&g, &n, x), seq()).unwrap();
                for h in g.lattice().class_reps().into_iter().filter(|h| n.is_subgroup_of(h)) {
                    for rho in ext.local_irreducibles(h).unwrap() {
                        assert_eq!(ext.evaluate(h, &rho).unwrap(), ext.evaluate_via_dim0(h, &rho).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn presentations_differing_by_kernel_vectors_agree() {
    for name in ["S3", "D4", "Q8", "A4", "S4", "C3:C4", "C5:C4"] {
        let g = group(name);
        let x0 = 1.min(g.order() - 1);
        let ext = extend(&transfer_oracle(&g, &g.trivial(), x0), seq()).unwrap();
        let ctx = ext.delta().context().clone();
        for rho in ext.local_irreducibles(&g.whole()).unwrap() {
            let x = ctx.presentation(&rho, PivotRule::SmallestRowMajor).unwrap();
            let base = ext.evaluate_element(&x).unwrap();
            for k in ctx.kernel_basis().unwrap() {
                assert_eq!(ext.evaluate_element(&x.add(&k)).unwrap(), base, "{name}");
            }
        }
    }
}

#[test]
fn pivoting_does_not_change_the_extension() {
    for g in groups_up_to(24) {
        for x in g.class_reps() {
            let delta = transfer_oracle(&g, &g.trivial(), x);
            let a = extend(&delta, seq()).unwrap();
            let b = extend(&delta, ExtendOptions { rule: PivotRule::SmallestReverse, ..seq() }).unwrap();
            assert!(uniqueness_check(&a, &b), "{:?}", g.name());
            assert!(uniqueness_check(&a, &a));
        }
    }
}

#[test]
fn s3_standard_representation_through_two_presentations() {
    let g = group("S3");
    let c3 = g.derived_subgroup(&g.whole());
    let transposition = g.elements().find(|&y| g.element_order(y) == 2).unwrap();
    let ext = extend(&transfer_oracle(&g, &g.trivial(), transposition), seq()).unwrap();
    let omega = characters_of(&g, &c3).into_iter().find(|c| !c.is_trivial()).unwrap();
    let std = induce(&omega, &g).unwrap();
    let expected = ext.delta().value(&omega).unwrap().mul(&ext.lambda_omega(&c3).unwrap());
    for rule in [PivotRule::SmallestRowMajor, PivotRule::SmallestReverse] {
        assert_eq!(ext.evaluate_with(&g.whole(), &std, rule).unwrap(), expected);
    }
}

#[test]
fn constant_one_extends_to_one() {
    for g in groups_up_to(24) {
        for n in g.normal_subgroups() {
            let delta = DeltaFunction::<FreeAbelian>::constant_one(&g, &n).unwrap();
            let ext = extend(&delta, seq()).unwrap();
            for h in subgroups_over(&g, &n) {
                for rho in ext.local_irreducibles(&h).unwrap() {
                    assert!(ext.evaluate(&h, &rho).unwrap().is_one());
                }
            }
        }
    }
}

#[test]
fn full_kernel_certificate() {
    for name in ["D4", "Q8", "S4", "A4", "C7:C3"] {
        let g = group(name);
        let delta = transfer_oracle(&g, &g.trivial(), g.order() - 1);
        let ext = extend(&delta, ExtendOptions { full_kernel: true, ..seq() }).unwrap();
        assert!(ext.checked_full_kernel());
        assert!(ext.certified_relations() > 0);
    }
}

#[test]
fn generic_symbols_are_refused() {
    for name in ["C4", "S3", "D4", "A4", "C2xC2"] {
        let g = group(name);
        let delta = generic_symbols(&g, &g.trivial());
        assert!(matches!(extend(&delta, seq()), Err(ExtendError::ConditionsViolated { .. })), "{name}");
        // without the condition checks the kernel certificate refuses too
        assert!(matches!(Extension::unchecked(&delta, seq()), Err(ExtendError::NotWellDefined { .. })), "{name}");
    }
}

#[test]
fn generic_symbols_on_c2_extend() {
    // every function on R₁(≤ C2) is extendible: the kernel of the Brauer map
    // is spanned by [1, 1] − (C2, 1) − (C2, sgn), on which Δ·λ is 1
    let g = group("C2");
    let ext = extend(&generic_symbols(&g, &g.trivial()), seq()).unwrap();
    let sgn = characters_of(&g, &g.whole()).into_iter().find(|c| !c.is_trivial()).unwrap();
    assert_eq!(ext.lambda_omega(&g.trivial()).unwrap(), ext.delta().value(&sgn).unwrap());
}

#[test]
fn extension_matches_on_induced_kernel_elements() {
    let g = group("S4");
    let ext = extend(&free_oracle(&g, &g.trivial()), seq()).unwrap();
    for h in g.lattice().class_reps() {
        let emb = g.embed(h);
        let local = emb.group();
        for k in brauer_ring::kernel_basis(local, &local.trivial()).unwrap() {
            let up: RPlusElement = induce_element(&k, &emb);
            assert!(ext.evaluate_element(&up).unwrap().is_one());
        }
    }
}

#[test]
fn characters_above_n_are_required() {
    let g = group("S3");
    let c3 = g.derived_subgroup(&g.whole());
    let ext = extend(&free_oracle(&g, &c3), seq()).unwrap();
    assert!(matches!(ext.evaluate(&g.trivial(), &ClassFunction::trivial(&group("C1"))), Err(ExtendError::OutOfRange)));
}
