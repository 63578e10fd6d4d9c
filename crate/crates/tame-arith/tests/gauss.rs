mod common;

use char_core::{Cyclotomic, Rational};
use common::{close, gauss_sum_prime, PRIME_POWERS};
use tame_arith::{gauss_sum, sqrt_prime, AdditiveCharacter, FiniteField, MultiplicativeCharacter, RootValue};

fn chi(f: &FiniteField, s: i64) -> MultiplicativeCharacter {
    MultiplicativeCharacter::new(f, s)
}

#[test]
fn quadratic_sum_over_f3() {
    let f = FiniteField::of_order(3).unwrap();
    let g = gauss_sum(&f, chi(&f, 1), AdditiveCharacter::STANDARD);
    let expected = Cyclotomic::root(1, 3).sub(&Cyclotomic::root(2, 3));
    assert_eq!(g.to_cyclotomic(), expected);
    assert_eq!(expected.mul(&expected), Cyclotomic::from_int(-3));
}

#[test]
fn trivial_character_gives_minus_one() {
    for q in PRIME_POWERS {
        let f = FiniteField::of_order(q).unwrap();
        let g = gauss_sum(&f, chi(&f, 0), AdditiveCharacter::STANDARD);
        assert_eq!(g.to_cyclotomic(), Cyclotomic::from_int(-1), "q={q}");
    }
}

#[test]
fn absolute_value_is_square_root_of_q() {
    for q in PRIME_POWERS {
        let f = FiniteField::of_order(q).unwrap();
        for s in 1..q as i64 - 1 {
            let g = gauss_sum(&f, chi(&f, s), AdditiveCharacter::STANDARD);
            assert_eq!(g.abs_squared(), Cyclotomic::from_int(q as i128), "q={q} s={s}");
        }
    }
}

#[test]
fn product_with_inverse_character() {
    // g(χ̄)·g(χ̄⁻¹) = χ̄(−1)·q
    for q in [3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
        let f = FiniteField::of_order(q).unwrap();
        for s in 1..q as i64 - 1 {
            let a = gauss_sum(&f, chi(&f, s), AdditiveCharacter::STANDARD).to_cyclotomic();
            let b = gauss_sum(&f, chi(&f, -s), AdditiveCharacter::STANDARD).to_cyclotomic();
            let sign = if (s as u64 * f.log_minus_one()).is_multiple_of(q - 1) { 1 } else { -1 };
            assert_eq!(a.mul(&b), Cyclotomic::from_int(sign * q as i128), "q={q} s={s}");
        }
    }
}

#[test]
fn prime_fields_match_floating_point_sums() {
    for p in [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
        let f = FiniteField::of_order(p).unwrap();
        for s in 0..p - 1 {
            for a in [1, 2, p - 1] {
                let g = gauss_sum(&f, chi(&f, s as i64), AdditiveCharacter { multiplier: a % p });
                assert!(close(g.to_complex(), gauss_sum_prime(p, s, a % p)), "p={p} s={s} a={a}");
            }
        }
    }
}

#[test]
fn lifting_to_extensions() {
    // −g_{F_{q^n}}(χ̄∘N) = (−g_{F_q}(χ̄))^n
    for (p, d, n) in [(2, 1, 2), (2, 1, 3), (2, 2, 2), (3, 1, 2), (3, 1, 3), (5, 1, 2), (2, 2, 3), (7, 1, 2)] {
        let small = FiniteField::new(p, d).unwrap();
        let big = FiniteField::new(p, d * n).unwrap();
        let (qm, bm) = (small.order() - 1, big.order() - 1);
        let step = bm / qm;
        let m = big.embedding_of(&small).unwrap().generator_log / step;
        let k = (1..=qm).find(|k| k * m % qm == 1 % qm).unwrap();
        for s in 0..qm {
            let lifted = chi(&big, (s * k % qm * step) as i64);
            let lhs = gauss_sum(&big, lifted, AdditiveCharacter::STANDARD).to_cyclotomic().neg();
            let base = gauss_sum(&small, chi(&small, s as i64), AdditiveCharacter::STANDARD).to_cyclotomic().neg();
            assert_eq!(lhs, base.pow(n as i64).unwrap(), "p={p} d={d} n={n} s={s}");
        }
    }
}

#[test]
fn square_roots_of_primes() {
    for p in [2, 3, 5, 7, 11, 13, 17, 19] {
        let r = sqrt_prime(p);
        assert_eq!(r.mul(&r), Cyclotomic::from_int(p as i128));
        let (re, im) = r.to_complex();
        assert!((re - (p as f64).sqrt()).abs() < 1e-9 && im.abs() < 1e-9, "p={p}");
    }
}

#[test]
fn root_values_round_trip_and_compare() {
    let half = RootValue::new(Cyclotomic::root(1, 4), 3, 5);
    assert_eq!(half.half_power(), 1);
    assert_eq!(half.coefficient(), Cyclotomic::root(1, 4).scale(Rational::from_integer(5)));
    let text = half.to_literal();
    assert_eq!(RootValue::parse_literal(&text).unwrap(), half);
    let whole = RootValue::new(Cyclotomic::from_int(3), 0, 0);
    assert_eq!(RootValue::parse_literal(&whole.to_literal()).unwrap(), whole);
    // √5·√5 written two ways
    let root5 = RootValue::new(Cyclotomic::one(), 1, 5);
    assert_eq!(extend_engine::ValueGroup::mul(&root5, &root5), RootValue::from_cyclotomic(Cyclotomic::from_int(5)));
    assert_eq!(RootValue::from_cyclotomic(sqrt_prime(5)), root5);
    assert!(RootValue::parse_literal("(1,2;").is_err());
}
