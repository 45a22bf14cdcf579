use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::{loop_value, BiLaurent, RatFn};

/// Integer polynomial in `α^±1, s^±1` and the loop value `δ`, the ring the
/// skein recursion works in before anything is divided.
///
/// Keys are `(α-exponent, s-exponent, δ-exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SkeinPoly {
    terms: BTreeMap<(i32, i32, u32), BigInt>,
}

impl SkeinPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 0)
    }

    pub fn monomial(a: i32, s: i32, d: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((a, s, d), BigInt::one());
        SkeinPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, k: (i32, i32, u32), c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// `self += c · α^a s^b δ^d · other`.
    pub fn add_scaled(&mut self, other: &SkeinPoly, c: i32, a: i32, b: i32, d: u32) {
        let c = BigInt::from(c);
        for (&(x, y, w), v) in &other.terms {
            self.add_term((x + a, y + b, w + d), &(v * &c));
        }
    }

    pub fn add(&self, other: &SkeinPoly) -> SkeinPoly {
        let mut out = self.clone();
        out.add_scaled(other, 1, 0, 0, 0);
        out
    }

    pub fn mul(&self, other: &SkeinPoly) -> SkeinPoly {
        let mut out = SkeinPoly::zero();
        for (&(a1, s1, d1), c1) in &self.terms {
            for (&(a2, s2, d2), c2) in &other.terms {
                out.add_term((a1 + a2, s1 + s2, d1 + d2), &(c1 * c2));
            }
        }
        out
    }

    /// `self · α^a s^b δ^d`.
    pub fn shifted(&self, a: i32, b: i32, d: u32) -> SkeinPoly {
        SkeinPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y, w), c)| ((x + a, y + b, w + d), c.clone()))
                .collect(),
        }
    }

    /// `self · z` with `z = s − s⁻¹`.
    pub fn times_z(&self) -> SkeinPoly {
        let mut out = self.shifted(0, 1, 0);
        out.add_scaled(self, -1, 0, -1, 0);
        out
    }

    /// The value in `ℚ(α, s)`.
    pub fn to_ratfn(&self) -> RatFn {
        let mut by_d: BTreeMap<u32, BiLaurent> = BTreeMap::new();
        for (&(a, s, d), c) in &self.terms {
            by_d.entry(d)
                .or_default()
                .add_term((a, s), BigRational::from_integer(c.clone()));
        }
        let delta = loop_value();
        let mut out = RatFn::zero();
        let mut pow = RatFn::one();
        let mut k = 0;
        for (d, l) in by_d {
            while k < d {
                pow = pow.mul(&delta);
                k += 1;
            }
            out = out.add(&RatFn::from_bilaurent(&l).mul(&pow));
        }
        out
    }
}
