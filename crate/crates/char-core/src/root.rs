use std::fmt;

use num_integer::Integer;

use crate::cyclotomic::Cyclotomic;

/// The root of unity exp(2πi·num/den), stored as a reduced fraction in [0,1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };

    /// ζ_m^k
    pub fn new(k: i64, m: u64) -> RootOfUnity {
        assert!(m > 0);
        let k = k.rem_euclid(m as i64) as u64;
        let g = k.gcd(&m);
        RootOfUnity { num: k / g, den: m / g }
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.den
    }

    /// Exponent relative to ζ_m; requires `order | m`.
    pub fn exponent_for(&self, m: u64) -> Option<u64> {
        m.is_multiple_of(self.den).then(|| self.num * (m / self.den))
    }

    pub fn fraction(&self) -> (u64, u64) {
        (self.num, self.den)
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let l = self.den.lcm(&other.den);
        RootOfUnity::new((self.num * (l / self.den) + other.num * (l / other.den)) as i64, l)
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(-(self.num as i64), self.den)
    }

    pub fn pow(&self, e: i64) -> RootOfUnity {
        let k = (self.num as i128 * e as i128).rem_euclid(self.den as i128);
        RootOfUnity::new(k as i64, self.den)
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::root(self.num as i64, self.den as u32)
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "1")
        } else {
            write!(f, "z{}^{}", self.den, self.num)
        }
    }
}
