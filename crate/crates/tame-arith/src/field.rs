use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::TameError;

/// Polynomials over Z/p, constant term first, no trailing zeros (the zero
/// polynomial is empty).
type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_inverse(m[dm], p);
    while r.len() > dm {
        let c = r[r.len() - 1] * lead_inv % p;
        let shift = r.len() - 1 - dm;
        for (j, &mj) in m.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p * p - c * mj % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_rem(&out, m, p)
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let n = (m.len() - 1) as u32;
    let x: Poly = vec![0, 1];
    // X^{p^k} mod m
    let frob = |k: u32| (0..k).fold(poly_rem(&x, m, p), |acc, _| poly_powmod(&acc, p, m, p));
    if frob(n) != poly_rem(&x, m, p) {
        return false;
    }
    prime_divisors(n as u64).into_iter().all(|r| {
        let h = poly_sub(&frob(n / r as u32), &x, p);
        poly_gcd(m, &h, p).len() == 1
    })
}

pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

pub(crate) fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "{a} is not invertible mod {m}");
    t0.rem_euclid(m as i128) as u64
}

/// Multiplicative order of `a` modulo `m` (gcd(a, m) = 1).
pub(crate) fn multiplicative_order(a: u64, m: u64) -> u64 {
    let mut x = a % m;
    let mut k = 1;
    while x != 1 % m {
        x = x * a % m;
        k += 1;
    }
    k
}

/// Split `q` as `p^f`.
pub fn prime_power(q: u64) -> Result<(u64, u32), TameError> {
    let ps = prime_divisors(q);
    let [p] = ps.as_slice() else { return Err(TameError::NotPrimePower(q)) };
    let mut f = 0;
    let mut n = q;
    while n > 1 {
        n /= p;
        f += 1;
    }
    Ok((*p, f))
}

/// The field F_q, q = p^f, as F_p[X]/(m) with discrete-log tables.
///
/// Elements are the integers `Σ c_i p^i` for the coset of `Σ c_i X^i`.
/// `m` is the monic irreducible of degree f whose lower coefficients have
/// the least such code, and the generator is the least element of order
/// q − 1.
#[derive(Debug)]
pub struct FiniteField {
    p: u64,
    degree: u32,
    q: u64,
    modulus: Poly,
    generator: u64,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// Tr(X^i) for the power basis.
    basis_trace: Vec<u64>,
}

fn cache() -> &'static Mutex<HashMap<(u64, u32), Arc<FiniteField>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Arc<FiniteField>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl FiniteField {
    /// The shared field of order p^degree.
    pub fn new(p: u64, degree: u32) -> Result<Arc<FiniteField>, TameError> {
        if !is_prime(p) || degree == 0 {
            return Err(TameError::NotPrimePower(p.saturating_pow(degree)));
        }
        if let Some(f) = cache().lock().unwrap().get(&(p, degree)) {
            return Ok(f.clone());
        }
        let field = Arc::new(Self::build(p, degree));
        cache().lock().unwrap().entry((p, degree)).or_insert_with(|| field.clone());
        Ok(field)
    }

    pub fn of_order(q: u64) -> Result<Arc<FiniteField>, TameError> {
        let (p, f) = prime_power(q)?;
        Self::new(p, f)
    }

    fn build(p: u64, degree: u32) -> FiniteField {
        let q = p.checked_pow(degree).expect("field too large");
        let n = degree as usize;
        let modulus = (0..q)
            .map(|code| {
                let mut m = digits(code, p, n);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial exists in every degree");
        let mut field = FiniteField {
            p,
            degree,
            q,
            modulus,
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
            basis_trace: Vec::new(),
        };
        let order = q - 1;
        let primes = prime_divisors(order);
        field.generator = (1..q)
            .find(|&x| primes.iter().all(|r| field.slow_pow(x, order / r) != 1))
            .expect("F_q^× is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u64;
        for i in 0..order {
            exp.push(x as u32);
            log[x as usize] = i as u32;
            x = field.slow_mul(x, field.generator);
        }
        field.exp = exp;
        field.log = log;
        field.basis_trace = (0..n)
            .map(|i| {
                let xi = field.encode(&[vec![0; i], vec![1]].concat());
                let t = (0..degree).fold(0, |acc, k| field.add(acc, field.pow(xi, p.pow(k))));
                debug_assert!(t < p, "trace lies in the prime field");
                t
            })
            .collect();
        field
    }

    fn decode(&self, x: u64) -> Poly {
        trim(digits(x, self.p, self.degree as usize))
    }

    fn encode(&self, a: &[u64]) -> u64 {
        a.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_mul(&self, a: u64, b: u64) -> u64 {
        self.encode(&poly_mulmod(&self.decode(a), &self.decode(b), &self.modulus, self.p))
    }

    fn slow_pow(&self, a: u64, e: u64) -> u64 {
        self.encode(&poly_powmod(&self.decode(a), e, &self.modulus, self.p))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Coefficients of the modulus, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.q
    }

    /// The image of an integer.
    pub fn scalar(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += (self.p - a % self.p) % self.p * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.q - 1);
        self.exp[s as usize] as u64
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if a == 0 {
            return u64::from(e == 0);
        }
        let s = (self.log[a as usize] as u128 * e as u128 % (self.q - 1) as u128) as usize;
        self.exp[s] as u64
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| self.exp[((self.q - 1 - self.log[a as usize] as u64) % (self.q - 1)) as usize] as u64)
    }

    /// Discrete logarithm to the base of the generator.
    pub fn dlog(&self, a: u64) -> Option<u64> {
        (a != 0 && a < self.q).then(|| self.log[a as usize] as u64)
    }

    /// generator^k
    pub fn exp(&self, k: i64) -> u64 {
        self.exp[k.rem_euclid((self.q - 1) as i64) as usize] as u64
    }

    /// Discrete log of −1.
    pub fn log_minus_one(&self) -> u64 {
        if self.p == 2 { 0 } else { (self.q - 1) / 2 }
    }

    /// Frobenius power a^{p^k}.
    pub fn frobenius(&self, a: u64, k: u32) -> u64 {
        self.pow(a, self.p.pow(k % self.degree))
    }

    /// Absolute trace to F_p, as an integer in 0..p.
    pub fn trace(&self, a: u64) -> u64 {
        let (mut a, mut t) = (a, 0);
        for &bt in &self.basis_trace {
            t = (t + a % self.p * bt) % self.p;
            a /= self.p;
        }
        t
    }

    /// Trace to the subfield of degree `sub` (which must divide the degree).
    pub fn trace_to(&self, a: u64, sub: u32) -> u64 {
        assert_eq!(self.degree % sub, 0, "not a subfield");
        (0..self.degree / sub).fold(0, |acc, i| self.add(acc, self.frobenius(a, sub * i)))
    }

    /// Norm to the subfield of degree `sub`.
    pub fn norm_to(&self, a: u64, sub: u32) -> u64 {
        assert_eq!(self.degree % sub, 0, "not a subfield");
        let e = (self.q - 1) / (self.p.pow(sub) - 1);
        self.pow(a, e)
    }

    /// Whether `a` lies in the subfield of degree `sub`.
    pub fn in_subfield(&self, a: u64, sub: u32) -> bool {
        self.degree.is_multiple_of(sub) && self.frobenius(a, sub) == a
    }

    /// Evaluate a polynomial over F_p at `a`.
    pub fn evaluate(&self, coeffs: &[u64], a: u64) -> u64 {
        coeffs.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, a), c % self.p))
    }

    /// The embedding of `sub` sending X to the least root of its modulus.
    pub fn embedding_of(&self, sub: &FiniteField) -> Result<SubfieldEmbedding, TameError> {
        if sub.p != self.p || !self.degree.is_multiple_of(sub.degree) {
            return Err(TameError::NotASubfield { sub: sub.q, field: self.q });
        }
        if sub.degree == self.degree {
            return Ok(SubfieldEmbedding { generator_log: 1 });
        }
        let root = self
            .elements()
            .find(|&y| self.evaluate(&sub.modulus, y) == 0)
            .expect("a subfield modulus splits in the extension");
        let image = self.evaluate(&sub.decode(sub.generator), root);
        Ok(SubfieldEmbedding { generator_log: self.dlog(image).expect("generator image is nonzero") })
    }
}

/// An embedding of a subfield, recorded by the discrete log of the image of
/// the subfield generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubfieldEmbedding {
    pub generator_log: u64,
}

fn digits(mut code: u64, p: u64, n: usize) -> Poly {
    (0..n)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}
