use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use char_core::{Cyclotomic, Rational, RootOfUnity};
use extend_engine::ValueGroup;

use crate::error::TameError;

/// The exact number z·c·p^{k/2}, with p the residue characteristic of the
/// computation.  Stored with k ∈ {0, 1}; p is 0 when k = 0.  The root of
/// unity z is kept apart so products stay in the smaller field of c.
#[derive(Clone)]
pub struct RootValue {
    z: RootOfUnity,
    c: Cyclotomic,
    k: i64,
    p: u64,
}

/// √p as an element of a cyclotomic field.
pub fn sqrt_prime(p: u64) -> Cyclotomic {
    static CACHE: OnceLock<Mutex<HashMap<u64, Cyclotomic>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().unwrap().get(&p) {
        return s.clone();
    }
    let s = if p == 2 {
        Cyclotomic::root(1, 8).add(&Cyclotomic::root(-1, 8))
    } else {
        // quadratic Gauss sum, = √p or i√p
        let mut counts = vec![0i128; p as usize];
        for a in 1..p {
            let pow = (0..(p - 1) / 2).fold(1u64, |acc, _| acc * a % p);
            counts[a as usize] = if pow == 1 { 1 } else { -1 };
        }
        let g = Cyclotomic::from_counts(p as u32, &counts);
        if p % 4 == 1 { g } else { g.mul(&Cyclotomic::root(-1, 4)) }
    };
    cache.lock().unwrap().insert(p, s.clone());
    s
}

impl RootValue {
    /// c·p^{k/2}
    pub fn new(c: Cyclotomic, k: i64, p: u64) -> RootValue {
        let (c, k) = if k == 0 {
            (c, 0)
        } else {
            let half = k.div_euclid(2);
            let pk = Rational::from_integer(p as i128).pow(half as i32);
            (c.scale(pk), k.rem_euclid(2))
        };
        RootValue { z: RootOfUnity::ONE, c, k, p: if k == 0 { 0 } else { p } }
    }

    pub fn from_cyclotomic(c: Cyclotomic) -> RootValue {
        RootValue { z: RootOfUnity::ONE, c, k: 0, p: 0 }
    }

    pub fn root(z: RootOfUnity) -> RootValue {
        RootValue { z, c: Cyclotomic::one(), k: 0, p: 0 }
    }

    /// The cyclotomic factor c with z folded in.
    pub fn coefficient(&self) -> Cyclotomic {
        if self.z.is_one() { self.c.clone() } else { self.c.mul(&self.z.to_cyclotomic()) }
    }

    /// The exponent k in {0, 1}.
    pub fn half_power(&self) -> i64 {
        self.k
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// The value as one cyclotomic number.
    pub fn to_cyclotomic(&self) -> Cyclotomic {
        let c = self.coefficient();
        if self.k == 0 { c } else { c.mul(&sqrt_prime(self.p)) }
    }

    /// |x|², exactly.
    pub fn abs_squared(&self) -> Cyclotomic {
        let c = self.c.mul(&self.c.conj());
        if self.k == 0 { c } else { c.scale_int(self.p as i128) }
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let (re, im) = self.c.to_complex();
        let (num, den) = self.z.fraction();
        let (sin, cos) = (std::f64::consts::TAU * num as f64 / den as f64).sin_cos();
        let s = (self.p as f64).powf(self.k as f64 / 2.0);
        ((re * cos - im * sin) * s, (re * sin + im * cos) * s)
    }

    /// `(c0,c1,...;m)` or `(c0,...;m)*p^(1/2)`.
    pub fn to_literal(&self) -> String {
        if self.k == 0 {
            self.coefficient().to_literal()
        } else {
            format!("{}*{}^(1/2)", self.coefficient().to_literal(), self.p)
        }
    }

    pub fn parse_literal(text: &str) -> Result<RootValue, TameError> {
        let bad = || TameError::Parse(text.to_string());
        let text = text.trim();
        let (lit, power) = match text.rsplit_once(")*") {
            Some((lit, power)) => (format!("{lit})"), Some(power)),
            None => (text.to_string(), None),
        };
        let c = Cyclotomic::parse_literal(&lit).map_err(|_| bad())?;
        let Some(power) = power else { return Ok(Self::from_cyclotomic(c)) };
        let (p, exp) = power.split_once("^(").ok_or_else(bad)?;
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let exp = exp.strip_suffix(')').ok_or_else(bad)?;
        let k: i64 = match exp.split_once('/') {
            Some((num, "2")) => num.trim().parse().map_err(|_| bad())?,
            None => 2 * exp.trim().parse::<i64>().map_err(|_| bad())?,
            _ => return Err(bad()),
        };
        Ok(Self::new(c, k, p))
    }
}

impl PartialEq for RootValue {
    fn eq(&self, other: &Self) -> bool {
        if self.k == other.k && self.p == other.p {
            if self.z == other.z {
                return self.c == other.c;
            }
            return self.c.mul(&self.z.mul(&other.z.inv()).to_cyclotomic()) == other.c;
        }
        self.to_cyclotomic() == other.to_cyclotomic()
    }
}

impl fmt::Debug for RootValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RootValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "{}", self.coefficient())
        } else {
            write!(f, "({})*{}^(1/2)", self.coefficient(), self.p)
        }
    }
}

impl ValueGroup for RootValue {
    fn one() -> Self {
        Self::from_cyclotomic(Cyclotomic::one())
    }

    fn mul(&self, other: &Self) -> Self {
        let p = match (self.k, other.k) {
            (0, _) => other.p,
            (_, 0) => self.p,
            _ => {
                assert_eq!(self.p, other.p, "root values over different primes");
                self.p
            }
        };
        let mut out = Self::new(self.c.mul(&other.c), self.k + other.k, p);
        out.z = self.z.mul(&other.z);
        out
    }

    fn inv(&self) -> Self {
        let c = self.c.inv().expect("root values are nonzero");
        let mut out = Self::new(c, -self.k, self.p);
        out.z = self.z.inv();
        out
    }

    fn to_text(&self) -> String {
        self.to_literal()
    }

    fn parse_text(text: &str) -> Result<Self, String> {
        Self::parse_literal(text).map_err(|e| e.to_string())
    }
}
