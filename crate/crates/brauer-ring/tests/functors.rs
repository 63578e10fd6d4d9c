mod common;

use brauer_ring::{
    brauer_map, deflate_element, induce_element, inflate_element, multiply, restrict_element, RPlusElement,
};
use char_core::{induce_class_function, restrict, ClassFunction, Cyclotomic};
use common::*;
use group_core::QuotientMap;

/// u*(f)(x) = f(u(x)) as a class function on the parent.
fn inflate_cf(cf: &ClassFunction, q: &QuotientMap) -> ClassFunction {
    let g = q.parent();
    let values: Vec<Cyclotomic> = g.classes().iter().map(|c| cf.value_at(q.project(c[0])).clone()).collect();
    ClassFunction::new(g, values)
}

#[test]
fn induction_and_restriction_commute_with_phi() {
    let mut rng = rng(10);
    for g in small_groups(24) {
        for b in g.lattice().class_reps() {
            let emb = g.embed(b);
            let local = emb.group();
            for _ in 0..3 {
                let x = random_element(local, &mut rng);
                let up = induce_element(&x, &emb);
                assert_eq!(brauer_map(&up), induce_class_function(&brauer_map(&x), &emb));
                let y = random_element(&g, &mut rng);
                let down = restrict_element(&y, &emb);
                assert_eq!(brauer_map(&down), restrict(&brauer_map(&y), &emb));
            }
        }
    }
}

#[test]
fn inflation_commutes_with_phi_and_inverts_deflation() {
    let mut rng = rng(11);
    for g in small_groups(24) {
        for n in g.normal_subgroups() {
            let q = g.quotient(&n).unwrap();
            for _ in 0..3 {
                let x = random_element(q.group(), &mut rng);
                let up = inflate_element(&x, &q);
                assert!(up.with_lower(&n).is_ok());
                assert_eq!(brauer_map(&up), inflate_cf(&brauer_map(&x), &q));
                assert_eq!(deflate_element(&up, &q).unwrap(), x);
            }
        }
    }
}

#[test]
fn module_identity_over_subgroups() {
    // x·[H,χ] = Ind_H(Res_H(x)·(H,χ))
    let mut rng = rng(12);
    for g in small_groups(24) {
        for h in g.lattice().class_reps() {
            let emb = g.embed(h);
            for chi in chars(&g, h) {
                let x = random_element(&g, &mut rng);
                let lhs = multiply(&x, &RPlusElement::generator(&g, &chi));
                let local_chi = chi.relabel(emb.group().whole());
                let local = multiply(&restrict_element(&x, &emb), &RPlusElement::generator(emb.group(), &local_chi));
                assert_eq!(lhs, induce_element(&local, &emb));
            }
        }
    }
}
