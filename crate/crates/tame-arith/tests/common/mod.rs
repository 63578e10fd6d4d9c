#![allow(dead_code)]

use std::f64::consts::TAU;

pub const PRIME_POWERS: [u64; 27] =
    [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64];

pub type Complex = (f64, f64);

pub fn expi(theta: f64) -> Complex {
    (theta.cos(), theta.sin())
}

pub fn cmul(a: Complex, b: Complex) -> Complex {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

pub fn close(a: Complex, b: Complex) -> bool {
    (a.0 - b.0).abs() < 1e-8 && (a.1 - b.1).abs() < 1e-8
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// The least primitive root modulo a prime, by brute force.
pub fn primitive_root(p: u64) -> u64 {
    (1..p).find(|&g| (1..p - 1).all(|k| pow_mod(g, k, p) != 1)).unwrap()
}

/// Σ_{x ∈ F_p^×} χ̄(x)^{-1} ζ_p^{a x} with χ̄(g^t) = e^{2πi s t/(p−1)}, in floating
/// point over the integers mod p.
pub fn gauss_sum_prime(p: u64, s: u64, a: u64) -> Complex {
    let g = primitive_root(p);
    let mut x = 1u64;
    let mut acc = (0.0, 0.0);
    for t in 0..p - 1 {
        let chi = expi(-TAU * (s * t) as f64 / (p - 1) as f64);
        let psi = expi(TAU * (a * x % p) as f64 / p as f64);
        let term = cmul(chi, psi);
        acc = (acc.0 + term.0, acc.1 + term.1);
        x = x * g % p;
    }
    acc
}

/// The tame root number over a base field with prime residue field, straight
/// from the sum over U/U^1 with c = π^{a − ℓ}:
/// χ(c)·p^{−a/2}·Σ χ⁻¹(x)·ψ(x/c), where ψ(y π^{ℓ−1}) = ζ_p^{y}.
pub fn root_number_prime(p: u64, level: i64, s: u64, z_fraction: f64) -> Complex {
    let a = i64::from(s != 0);
    let nu = a - level;
    let translate = expi(TAU * z_fraction * nu as f64);
    if a == 0 {
        return translate;
    }
    let g = gauss_sum_prime(p, s, 1);
    let scale = (p as f64).powf(-0.5);
    let v = cmul(translate, g);
    (v.0 * scale, v.1 * scale)
}
