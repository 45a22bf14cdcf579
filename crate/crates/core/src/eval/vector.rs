use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::engine::Value;
use super::lift::Matching;
use crate::coeff::{LazySum, RatFn};

/// A formal combination of canonical lifts of `(top, bottom)` matchings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleVector {
    top: usize,
    bottom: usize,
    coords: BTreeMap<Matching, RatFn>,
}

impl TangleVector {
    pub fn zero(top: usize, bottom: usize) -> Self {
        TangleVector {
            top,
            bottom,
            coords: BTreeMap::new(),
        }
    }

    pub fn basis(m: Matching) -> Self {
        Self::term(m, RatFn::one())
    }

    pub fn term(m: Matching, c: RatFn) -> Self {
        let mut v = Self::zero(m.top(), m.bottom());
        v.add_term(m, c);
        v
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Matching::identity(n))
    }

    pub(crate) fn from_value(top: usize, bottom: usize, v: &Value) -> Self {
        let mut out = Self::zero(top, bottom);
        for (m, p) in v {
            out.add_term(m.clone(), p.to_ratfn());
        }
        out
    }

    /// Collects `Σ cᵢ·vᵢ` with one reduction per coordinate.
    pub fn linear_combination<'a>(
        top: usize,
        bottom: usize,
        terms: impl IntoIterator<Item = (RatFn, &'a TangleVector)>,
    ) -> Self {
        let mut acc: BTreeMap<&Matching, LazySum> = BTreeMap::new();
        for (c, v) in terms {
            assert_eq!((v.top, v.bottom), (top, bottom));
            for (m, x) in &v.coords {
                acc.entry(m).or_default().add_product(&c, x);
            }
        }
        let mut out = Self::zero(top, bottom);
        for (m, sum) in acc {
            out.add_term(m.clone(), sum.finish());
        }
        out
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, m: &Matching) -> RatFn {
        self.coords.get(m).cloned().unwrap_or_else(RatFn::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Matching, &RatFn)> {
        self.coords.iter()
    }

    pub fn add_term(&mut self, m: Matching, c: RatFn) {
        assert_eq!((m.top(), m.bottom()), (self.top, self.bottom));
        if c.is_zero() {
            return;
        }
        match self.coords.get_mut(&m) {
            Some(e) => {
                *e = e.add(&c);
                if e.is_zero() {
                    self.coords.remove(&m);
                }
            }
            None => {
                self.coords.insert(m, c);
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &TangleVector, c: &RatFn) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.coords {
            self.add_term(m.clone(), x.mul(c));
        }
    }

    pub fn add(&self, other: &TangleVector) -> TangleVector {
        let mut out = self.clone();
        out.add_scaled(other, &RatFn::one());
        out
    }

    pub fn sub(&self, other: &TangleVector) -> TangleVector {
        let mut out = self.clone();
        out.add_scaled(other, &RatFn::from_int(-1));
        out
    }

    pub fn scale(&self, c: &RatFn) -> TangleVector {
        let mut out = Self::zero(self.top, self.bottom);
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> TangleVector {
        self.scale(&RatFn::from_int(-1))
    }

    /// The part supported on the given matchings.
    pub fn restricted(&self, keep: impl Fn(&Matching) -> bool) -> TangleVector {
        TangleVector {
            top: self.top,
            bottom: self.bottom,
            coords: self
                .coords
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for TangleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.coords.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{m}: {c}")?;
        }
        Ok(())
    }
}
