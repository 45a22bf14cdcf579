use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in `α, s` with rational coefficients.
///
/// Keys are `(α-exponent, s-exponent)`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BiLaurent {
    terms: BTreeMap<(i32, i32), BigRational>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0, 0)
    }

    pub fn monomial(c: BigRational, a: i32, s: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, s), c);
        }
        BiLaurent { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i32, i32), BigRational)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: (i32, i32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical print order: graded lexicographic, `α > s`, descending.
    pub fn sorted_terms(&self) -> Vec<((i32, i32), BigRational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by_key(|((a, s), _)| std::cmp::Reverse((a + s, *a)));
        v
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BiLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a1, s1), c1) in &self.terms {
            for ((a2, s2), c2) in &other.terms {
                out.add_term((a1 + a2, s1 + s2), c1 * c2);
            }
        }
        out
    }

    /// Smallest exponents appearing, `(0, 0)` for the zero polynomial.
    pub fn min_exponents(&self) -> (i32, i32) {
        let a = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let s = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (a, s)
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &[((i32, i32), BigRational)],
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, ((a, s), c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if idx == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        let mut parts = Vec::new();
        if *a != 0 || *s != 0 {
            if !mag.is_one() {
                parts.push(format!("{mag}"));
            }
        } else {
            parts.push(format!("{mag}"));
        }
        match *a {
            0 => {}
            1 => parts.push("a".to_string()),
            k => parts.push(format!("a^{k}")),
        }
        match *s {
            0 => {}
            1 => parts.push("s".to_string()),
            k => parts.push(format!("s^{k}")),
        }
        write!(f, "{}", parts.join("*"))?;
    }
    Ok(())
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.sorted_terms())
    }
}
