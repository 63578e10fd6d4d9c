use char_core::RootOfUnity;
use group_core::exec::Strategy;
use tame_arith::{
    abelian_case, check_dh_i, check_dh_i_batch, check_dh_iii_batch, check_dh_iii_tame, conductor_inductivity,
    norm_characters, r1_fibre_matches, r1_twist_exponents, AbelianCase, TameChar, TameError, TameField, TypeThreeSetup,
};

const SMALL_Q: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

/// Every character of F^× with χ(π) of order dividing m.
fn all_characters(f: &TameField, m: u64) -> Vec<TameChar> {
    f.characters(m)
}

/// The abelian prime-degree extensions of F_q-type fields with ℓ ∈ {2, 3, 5}.
fn abelian_instances(base: &TameField) -> Vec<TameField> {
    let mut out = Vec::new();
    for ell in [2u64, 3, 5] {
        out.push(base.extension(1, ell as u32).unwrap());
        if ell != base.p() && (base.q() - 1).is_multiple_of(ell) {
            out.push(base.extension(ell, 1).unwrap());
            // a second Eisenstein uniformizer, π_K^ℓ = π_F·g
            out.push(base.extension_with_unit(ell, 1, 1).unwrap());
        }
    }
    out
}

#[test]
fn first_lemma_over_the_small_grid() {
    let mut checked = 0;
    for q in SMALL_Q {
        for level in [0, 1] {
            let base = TameField::base(q, level).unwrap();
            for k in abelian_instances(&base) {
                let ell = k.degree();
                let reports = check_dh_i_batch(&k, &all_characters(&base, 2 * ell), Strategy::Parallel).unwrap();
                for r in &reports {
                    assert!(r.full.holds(), "{k:?} {}", r.instance);
                    assert_eq!(r.odd.is_some(), ell % 2 == 1, "{}", r.instance);
                    assert!(r.holds(), "{k:?} {}", r.instance);
                }
                checked += reports.len();
            }
        }
    }
    assert!(checked > 1000, "{checked}");
}

#[test]
fn first_lemma_examples() {
    // q = 3, unramified quadratic, quadratic residue character
    let f3 = TameField::base(3, 0).unwrap();
    let k = f3.extension(1, 2).unwrap();
    for j in 0..4 {
        let chi = TameChar::new(&f3, 1, RootOfUnity::new(j, 4));
        assert!(check_dh_i(&k, &chi).unwrap().holds());
    }
    // q = 4, ramified cubic, the three residue characters
    let f4 = TameField::base(4, 0).unwrap();
    let k = f4.extension(3, 1).unwrap();
    assert_eq!(abelian_case(&k).unwrap(), AbelianCase::Ramified(3));
    for s in 0..3 {
        let chi = TameChar::new(&f4, s, RootOfUnity::ONE);
        let report = check_dh_i(&k, &chi).unwrap();
        assert!(report.full.holds() && report.odd.unwrap().holds(), "s={s}");
    }
    // trivial χ: both sides are the product over S
    let report = check_dh_i(&k, &TameChar::trivial(&f4)).unwrap();
    assert_eq!(report.full.lhs, report.full.rhs);
}

#[test]
fn sequential_and_parallel_batches_agree() {
    let base = TameField::base(9, 0).unwrap();
    let k = base.extension(2, 1).unwrap();
    let chars = all_characters(&base, 4);
    let a = check_dh_i_batch(&k, &chars, Strategy::Sequential).unwrap();
    let b = check_dh_i_batch(&k, &chars, Strategy::Parallel).unwrap();
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.instance, y.instance);
        assert_eq!(x.full.lhs, y.full.lhs);
    }
}

#[test]
fn norm_characters_vanish_on_norms() {
    for q in SMALL_Q {
        let base = TameField::base(q, 0).unwrap();
        for k in abelian_instances(&base) {
            let s = norm_characters(&k).unwrap();
            assert_eq!(s.len() as u64, k.degree());
            for mu in &s {
                assert!(k.pull_back(mu).unwrap().is_trivial(), "{k:?} {mu:?}");
            }
            // and they are all the characters that do, among χ(π) ∈ μ_ℓ
            let killed = base.characters(k.degree()).iter().filter(|c| k.pull_back(c).unwrap().is_trivial()).count();
            assert_eq!(killed, s.len(), "{k:?}");
        }
    }
    let f = TameField::base(5, 0).unwrap();
    assert_eq!(norm_characters(&f).unwrap().len(), 1);
    assert!(matches!(norm_characters(&f.extension(3, 1).unwrap()), Err(TameError::NotAbelianTameCase(_))));
    assert!(matches!(norm_characters(&f.extension(2, 2).unwrap()), Err(TameError::NotAbelianTameCase(_))));
}

#[test]
fn induced_character_identity() {
    for q in [3, 4, 5, 7, 9] {
        let base = TameField::base(q, 0).unwrap();
        for k in abelian_instances(&base) {
            let m = 2 * k.degree();
            for chi in all_characters(&base, m).iter().step_by(3) {
                assert!(r1_fibre_matches(&k, chi, m).unwrap(), "{k:?} {chi:?}");
                assert!(r1_twist_exponents(&k, chi).unwrap().equal(), "{k:?} {chi:?}");
            }
        }
    }
}

#[test]
fn third_lemma_instances() {
    for (q, ell) in [(2, 3), (3, 5), (2, 7), (5, 3), (4, 5), (2, 5)] {
        for level in [0, 1] {
            let base = TameField::base(q, level).unwrap();
            let setup = TypeThreeSetup::new(&base, ell).unwrap();
            let n = setup.l_field.inertia_degree() as u64;
            assert_eq!(setup.orbits.len() as u64, (ell - 1) / n);
            assert!(setup.orbits.iter().all(|o| o.len() as u64 == n));
            let reports = check_dh_iii_batch(&setup, &all_characters(&base, 6), Strategy::Parallel).unwrap();
            for r in &reports {
                assert!(r.full.holds(), "{}", r.instance);
                assert_eq!(r.odd.is_some(), setup.closure_degree() % 2 == 1);
                assert!(r.holds(), "{}", r.instance);
            }
        }
    }
}

#[test]
fn third_lemma_odd_form() {
    let base = TameField::base(2, 0).unwrap();
    let setup = TypeThreeSetup::new(&base, 7).unwrap();
    assert_eq!(setup.closure_degree(), 21);
    let reps = setup.inverse_stable_representatives();
    assert_eq!(reps.len(), 2);
    assert!(reps.iter().any(|r| reps.contains(&r.inverse())));
    for chi in all_characters(&base, 7) {
        assert!(check_dh_iii_tame(&base, 7, &chi).unwrap().odd.unwrap().holds());
    }
}

#[test]
fn third_lemma_errors() {
    let f7 = TameField::base(7, 0).unwrap();
    assert!(matches!(TypeThreeSetup::new(&f7, 3), Err(TameError::DegenerateCase(_))));
    assert!(matches!(TypeThreeSetup::new(&f7, 7), Err(TameError::WildRamification { .. })));
    assert!(matches!(TypeThreeSetup::new(&f7, 4), Err(TameError::NotAbelianTameCase(_))));
}

#[test]
fn conductor_grid() {
    for e in 1..=3 {
        for f in 1..=3 {
            for a_k in 0..=2 {
                for dim in 1..=2 {
                    for level in 0..=1 {
                        let c = conductor_inductivity(e, f, e - 1, a_k, dim, level);
                        assert!(c.equal(), "e={e} f={f} a={a_k} dim={dim} level={level}");
                    }
                }
            }
        }
    }
    let trivial = conductor_inductivity(1, 1, 0, 1, 1, 0);
    assert_eq!((trivial.lhs, trivial.rhs), (1, 1));
    let unramified = conductor_inductivity(1, 2, 0, 1, 1, 0);
    assert_eq!((unramified.lhs, unramified.rhs), (2, 2));
    let ramified = conductor_inductivity(3, 1, 2, 1, 1, 0);
    assert_eq!((ramified.lhs, ramified.rhs), (3, 3));
}
