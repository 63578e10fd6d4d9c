use std::collections::BTreeMap;
use std::fmt::{self, Debug};

/// A multiplicative abelian group with exact equality.
pub trait ValueGroup: Clone + PartialEq + Debug + Send + Sync {
    fn one() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// Literal used in delta files.
    fn to_text(&self) -> String;
    fn parse_text(text: &str) -> Result<Self, String>;
}

/// The free abelian group on named symbols: `a^2*b^-1`, with `1` the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeAbelian {
    exponents: BTreeMap<String, i64>,
}

impl FreeAbelian {
    pub fn symbol(name: &str) -> FreeAbelian {
        FreeAbelian { exponents: BTreeMap::from([(name.to_string(), 1)]) }
    }

    pub fn exponent(&self, name: &str) -> i64 {
        self.exponents.get(name).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<String, i64> {
        &self.exponents
    }
}

impl ValueGroup for FreeAbelian {
    fn one() -> Self {
        FreeAbelian::default()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut exponents = self.exponents.clone();
        for (k, &v) in &other.exponents {
            let e = exponents.entry(k.clone()).or_insert(0);
            *e += v;
            if *e == 0 {
                exponents.remove(k);
            }
        }
        FreeAbelian { exponents }
    }

    fn inv(&self) -> Self {
        FreeAbelian { exponents: self.exponents.iter().map(|(k, v)| (k.clone(), -v)).collect() }
    }

    fn to_text(&self) -> String {
        if self.exponents.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> =
            self.exponents.iter().map(|(k, &v)| if v == 1 { k.clone() } else { format!("{k}^{v}") }).collect();
        parts.join("*")
    }

    fn parse_text(text: &str) -> Result<Self, String> {
        let text = text.trim();
        if text == "1" {
            return Ok(FreeAbelian::one());
        }
        let mut out = FreeAbelian::one();
        for factor in text.split('*') {
            let (name, e) = match factor.split_once('^') {
                Some((name, e)) => (name.trim(), e.trim().parse::<i64>().map_err(|e| e.to_string())?),
                None => (factor.trim(), 1),
            };
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(format!("bad symbol {name:?}"));
            }
            out = out.mul(&FreeAbelian::symbol(name).pow(e));
        }
        Ok(out)
    }
}

impl Debug for FreeAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
