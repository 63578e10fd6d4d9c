use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::CharError;

pub type Rational = Ratio<i128>;

/// An element of Q(ζ_m) in canonical form.
///
/// `coeffs` (length φ(m)) are the numerators of the coordinates in the power
/// basis 1, ζ, …, ζ^{φ(m)-1}; `den > 0` is a common denominator and the
/// content of `coeffs` is coprime to it.  Two elements of the same modulus
/// are equal iff their fields are equal; mixed moduli compare after
/// embedding into the lcm.
#[derive(Clone)]
pub struct Cyclotomic {
    modulus: u32,
    coeffs: Vec<i128>,
    den: i128,
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i128>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i128>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of Φ_m, constant term first (monic, degree φ(m)).
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i128>> {
    if let Some(p) = cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m − 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i128; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    let p = Arc::new(num);
    cache().lock().unwrap().insert(m, p.clone());
    p
}

fn div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn checked_mac(acc: i128, a: i128, b: i128) -> i128 {
    a.checked_mul(b)
        .and_then(|p| acc.checked_add(p))
        .expect("cyclotomic coefficient overflow")
}

fn gcd_all(values: &[i128], den: i128) -> i128 {
    values.iter().fold(den, |g, &v| g.gcd(&v))
}

impl Cyclotomic {
    /// Build from a cyclic coefficient vector over ζ_m^0..ζ_m^{m-1}.
    pub fn from_cyclic(modulus: u32, cyclic: &[i128], den: i128) -> Cyclotomic {
        let raw = Self::reduce(modulus, cyclic, den);
        Self::normalized(modulus, raw.coeffs, raw.den)
    }

    /// Reduce mod Φ_m without collapsing rationals to modulus 1.
    fn reduce(modulus: u32, cyclic: &[i128], den: i128) -> Cyclotomic {
        assert!(modulus > 0 && cyclic.len() == modulus as usize && den != 0);
        let phi = cyclotomic_polynomial(modulus);
        let deg = phi.len() - 1;
        let terms: Vec<(usize, i128)> = phi[..deg].iter().copied().enumerate().filter(|t| t.1 != 0).collect();
        let mut v = cyclic.to_vec();
        for i in (deg..v.len()).rev() {
            let c = v[i];
            if c != 0 {
                let base = i - deg;
                for &(j, pj) in &terms {
                    v[base + j] = checked_mac(v[base + j], -c, pj);
                }
                v[i] = 0;
            }
        }
        v.truncate(deg);
        Cyclotomic { modulus, coeffs: v, den }
    }

    /// Σ counts[k] ζ_m^k
    pub fn from_counts(modulus: u32, counts: &[i128]) -> Cyclotomic {
        Self::from_cyclic(modulus, counts, 1)
    }

    fn normalized(modulus: u32, mut coeffs: Vec<i128>, mut den: i128) -> Cyclotomic {
        let g = gcd_all(&coeffs, den);
        if g != 1 && g != 0 {
            coeffs.iter_mut().for_each(|c| *c /= g);
            den /= g;
        }
        if den < 0 {
            coeffs.iter_mut().for_each(|c| *c = -*c);
            den = -den;
        }
        if modulus > 1 && coeffs.iter().skip(1).all(|&c| c == 0) {
            return Cyclotomic { modulus: 1, coeffs: vec![coeffs[0]], den };
        }
        Cyclotomic { modulus, coeffs, den }
    }

    pub fn zero() -> Cyclotomic {
        Cyclotomic { modulus: 1, coeffs: vec![0], den: 1 }
    }

    pub fn one() -> Cyclotomic {
        Self::from_int(1)
    }

    pub fn from_int(n: i128) -> Cyclotomic {
        Cyclotomic { modulus: 1, coeffs: vec![n], den: 1 }
    }

    pub fn from_rational(r: Rational) -> Cyclotomic {
        Self::normalized(1, vec![*r.numer()], *r.denom())
    }

    /// ζ_m^k
    pub fn root(k: i64, m: u32) -> Cyclotomic {
        let mut cyclic = vec![0; m as usize];
        cyclic[k.rem_euclid(m as i64) as usize] = 1;
        Self::from_cyclic(m, &cyclic, 1)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.modulus == 1 && self.coeffs[0] == 1 && self.den == 1
    }

    /// Coordinates in the power basis of Q(ζ_m).
    pub fn coordinates(&self) -> Vec<Rational> {
        self.coeffs.iter().map(|&c| Rational::new(c, self.den)).collect()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.modulus == 1).then(|| Rational::new(self.coeffs[0], self.den))
    }

    pub fn as_integer(&self) -> Option<i128> {
        (self.modulus == 1 && self.den == 1).then(|| self.coeffs[0])
    }

    /// The same number written in Q(ζ_target); `target` must be a multiple.
    pub fn embed(&self, target: u32) -> Cyclotomic {
        let raw = self.embed_raw(target);
        Self::normalized(target, raw.coeffs, raw.den)
    }

    fn embed_raw(&self, target: u32) -> Cyclotomic {
        if target == self.modulus {
            return self.clone();
        }
        assert_eq!(target % self.modulus, 0, "embedding needs a multiple of the modulus");
        let step = (target / self.modulus) as usize;
        let mut cyclic = vec![0; target as usize];
        for (k, &c) in self.coeffs.iter().enumerate() {
            cyclic[k * step] = c;
        }
        Self::reduce(target, &cyclic, self.den)
    }

    fn common(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let l = self.modulus.lcm(&other.modulus);
        (self.embed_raw(l), other.embed_raw(l))
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(other);
        let den = a.den.lcm(&b.den);
        let (fa, fb) = (den / a.den, den / b.den);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| checked_mac(x * fa, y, fb)).collect();
        Self::normalized(a.modulus, coeffs, den)
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| -c).collect(), den: self.den }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.modulus == 1 {
            return other.scale(Rational::new(self.coeffs[0], self.den));
        }
        if other.modulus == 1 {
            return self.scale(Rational::new(other.coeffs[0], other.den));
        }
        // convolve the unreduced embeddings, which keep only φ(m_a)·φ(m_b)
        // nonzero products, and reduce once
        let l = self.modulus.lcm(&other.modulus);
        let m = l as usize;
        let spread = |x: &Cyclotomic| -> Vec<(usize, i128)> {
            let step = (l / x.modulus) as usize;
            x.coeffs.iter().enumerate().filter(|p| *p.1 != 0).map(|(k, &c)| (k * step, c)).collect()
        };
        let (an, bn) = (spread(self), spread(other));
        let mut cyclic = vec![0i128; m];
        for &(i, x) in &an {
            for &(j, y) in &bn {
                let k = (i + j) % m;
                cyclic[k] = checked_mac(cyclic[k], x, y);
            }
        }
        let den = self.den.checked_mul(other.den).expect("cyclotomic denominator overflow");
        Self::from_cyclic(l, &cyclic, den)
    }

    pub fn scale(&self, r: Rational) -> Cyclotomic {
        let coeffs = self.coeffs.iter().map(|&c| checked_mac(0, c, *r.numer())).collect();
        let den = self.den.checked_mul(*r.denom()).expect("cyclotomic denominator overflow");
        Self::normalized(self.modulus, coeffs, den)
    }

    pub fn scale_int(&self, n: i128) -> Cyclotomic {
        self.scale(Rational::from_integer(n))
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    /// The automorphism ζ_m ↦ ζ_m^a (a coprime to m).
    pub fn galois(&self, a: i64) -> Cyclotomic {
        let m = self.modulus as i64;
        assert_eq!(a.rem_euclid(m).gcd(&m), 1, "galois exponent must be a unit");
        let mut cyclic = vec![0; self.modulus as usize];
        for (k, &c) in self.coeffs.iter().enumerate() {
            let t = (k as i64 * a).rem_euclid(m) as usize;
            cyclic[t] += c;
        }
        Self::from_cyclic(self.modulus, &cyclic, self.den)
    }

    pub fn pow(&self, e: i64) -> Result<Cyclotomic, CharError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Cyclotomic, CharError> {
        if self.is_zero() {
            return Err(CharError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        // x⁻¹ = conj(x) / (x conj(x)) when the norm to the real subfield is rational
        let n = self.mul(&self.conj());
        if let Some(r) = n.as_rational() {
            return Ok(self.conj().scale(r.recip()));
        }
        self.inv_by_elimination()
    }

    /// Solve x·y = 1 in the power basis by Gaussian elimination over Q.
    fn inv_by_elimination(&self) -> Result<Cyclotomic, CharError> {
        let m = self.modulus;
        let d = self.coeffs.len();
        // column k = coordinates of x·ζ^k
        let cols: Vec<Vec<Rational>> = (0..d).map(|k| self.mul(&Cyclotomic::root(k as i64, m)).embed_coords(m, d)).collect();
        let mut a: Vec<Vec<Rational>> = (0..d)
            .map(|r| {
                let mut row: Vec<Rational> = (0..d).map(|c| cols[c][r]).collect();
                row.push(if r == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !a[r][col].is_zero()).ok_or(CharError::DivisionByZero)?;
            a.swap(col, piv);
            let p = a[col][col];
            for v in a[col].iter_mut() {
                *v /= p;
            }
            for r in 0..d {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col];
                    for c in col..=d {
                        let t = a[col][c] * f;
                        a[r][c] -= t;
                    }
                }
            }
        }
        let sol: Vec<Rational> = (0..d).map(|r| a[r][d]).collect();
        Ok(Self::from_coordinates(m, &sol))
    }

    fn embed_coords(&self, m: u32, d: usize) -> Vec<Rational> {
        let mut c = self.embed(m).coordinates();
        c.resize(d, Rational::zero());
        c
    }

    /// Build from rational power-basis coordinates in Q(ζ_m).
    pub fn from_coordinates(m: u32, coords: &[Rational]) -> Cyclotomic {
        let den = coords.iter().fold(1i128, |l, c| l.lcm(c.denom()));
        let mut cyclic = vec![0; m as usize];
        for (k, c) in coords.iter().enumerate() {
            cyclic[k] = c.numer() * (den / c.denom());
        }
        Self::from_cyclic(m, &cyclic, den)
    }

    /// Numerical value (sanity checks only).
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.modulus as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (k, &c) in self.coeffs.iter().enumerate() {
            let t = std::f64::consts::TAU * k as f64 / m;
            re += c as f64 * t.cos();
            im += c as f64 * t.sin();
        }
        (re / self.den as f64, im / self.den as f64)
    }

    /// Literal `(c0,c1,...;m)` with reduced coordinates; rationals as `a/b`.
    pub fn to_literal(&self) -> String {
        let parts: Vec<String> = self.coordinates().iter().map(|c| c.to_string()).collect();
        format!("({};{})", parts.join(","), self.modulus)
    }

    pub fn parse_literal(text: &str) -> Result<Cyclotomic, CharError> {
        let bad = || CharError::Parse(text.to_string());
        let inner = text.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let (coeffs, m) = inner.rsplit_once(';').ok_or_else(bad)?;
        let m: u32 = m.trim().parse().map_err(|_| bad())?;
        if m == 0 {
            return Err(bad());
        }
        let coords = coeffs
            .split(',')
            .map(|c| c.trim().parse::<Rational>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        if coords.len() > m as usize {
            return Err(bad());
        }
        Ok(Self::from_coordinates(m, &coords))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.modulus == other.modulus {
            return self.den == other.den && self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.den == b.den && a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.coordinates().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => write!(f, "z{}^{k}", self.modulus)?,
                _ => write!(f, "{c}*z{}^{k}", self.modulus)?,
            }
        }
        Ok(())
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n as i128)
    }
}
