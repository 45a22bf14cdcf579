//! Dense integer polynomials in one variable (`s`) and two variables
//! (`α` over `Z[s]`), with exact division and gcd.
//!
//! These are the working representation behind [`RatFn`](super::RatFn).
//! Bivariate polynomials are stored recursively: a vector of `Z[s]`
//! coefficients indexed by the degree in `α`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in `s` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<BigInt>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = UPoly(vec![c]);
        p.trim();
        p
    }

    pub fn one() -> Self {
        UPoly(vec![BigInt::one()])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = UPoly(coeffs);
        p.trim();
        p
    }

    /// `c * s^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        UPoly(v)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&BigInt> {
        self.0.last()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn shift_down(&self, k: usize) -> Self {
        UPoly(self.0[k.min(self.0.len())..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        UPoly(v)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(short.0.iter()) {
            *a += b;
        }
        UPoly::from_coeffs(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut v = self.0.clone();
        v.resize(n, BigInt::zero());
        for (a, b) in v.iter_mut().zip(other.0.iter()) {
            *a -= b;
        }
        UPoly::from_coeffs(v)
    }

    pub fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly(self.0.iter().map(|x| x * c).collect())
    }

    /// Exact division by an integer; caller guarantees divisibility.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        UPoly(self.0.iter().map(|x| x / c).collect())
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().unwrap().is_negative() {
            g = -g;
        }
        if g.is_one() {
            self.clone()
        } else {
            self.div_scalar(&g)
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.degree().unwrap();
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        if dd == 0 {
            let c = &d.0[0];
            if self.0.iter().all(|x| x.is_multiple_of(c)) {
                return Some(self.div_scalar(c));
            }
            return None;
        }
        let lcd = d.lc().unwrap();
        let mut rem = self.0.clone();
        let mut q = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lcd);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[k + j] -= &qc * dc;
            }
            q[k] = qc;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(UPoly::from_coeffs(q))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().unwrap();
        let mut r = self.clone();
        let lcd = d.lc().unwrap().clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.lc().unwrap().clone();
            let mut v = r.scale(&lcd).0;
            for (j, dc) in d.0.iter().enumerate() {
                v[rd - dd + j] -= &lr * dc;
            }
            r = UPoly::from_coeffs(v);
        }
        r
    }

    /// Gcd in `Z[s]`, normalized to positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_signed();
        }
        if other.is_zero() {
            return self.primitive_signed();
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return UPoly::constant(c);
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.scale(&c)
    }

    /// Positive-leading-coefficient normalization without removing content.
    fn primitive_signed(&self) -> Self {
        match self.lc() {
            Some(l) if l.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}

/// A polynomial in `α` whose coefficients are polynomials in `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BPoly(Vec<UPoly>);

impl BPoly {
    pub fn zero() -> Self {
        BPoly(Vec::new())
    }

    pub fn one() -> Self {
        BPoly(vec![UPoly::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![UPoly::constant(c)])
    }

    pub fn from_coeffs(coeffs: Vec<UPoly>) -> Self {
        let mut p = BPoly(coeffs);
        p.trim();
        p
    }

    /// `c * α^i * s^j`
    pub fn monomial(c: BigInt, i: usize, j: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![UPoly::zero(); i + 1];
        v[i] = UPoly::monomial(c, j);
        BPoly(v)
    }

    /// Builds from `(α-exp, s-exp, coeff)` triples with nonnegative exponents.
    pub fn from_terms<'a>(terms: impl IntoIterator<Item = (usize, usize, &'a BigInt)>) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (i, j, c) in terms {
            if rows.len() <= i {
                rows.resize(i + 1, Vec::new());
            }
            let row = &mut rows[i];
            if row.len() <= j {
                row.resize(j + 1, BigInt::zero());
            }
            row[j] += c;
        }
        BPoly::from_coeffs(rows.into_iter().map(UPoly::from_coeffs).collect())
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Nonzero terms as `(α-exp, s-exp, coeff)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.0.iter().enumerate().flat_map(|(i, u)| {
            u.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    /// Leading term under graded lexicographic order with `α > s`.
    pub fn leading_grlex(&self) -> Option<(usize, usize, &BigInt)> {
        self.terms().max_by(|x, y| match (x.0 + x.1).cmp(&(y.0 + y.1)) {
            Ordering::Equal => x.0.cmp(&y.0),
            o => o,
        })
    }

    /// Largest `(a, b)` such that `α^a s^b` divides `self`.
    pub fn monomial_content(&self) -> (usize, usize) {
        let a = self.0.iter().position(|u| !u.is_zero()).unwrap_or(0);
        let b = self
            .0
            .iter()
            .filter_map(|u| u.low_degree())
            .min()
            .unwrap_or(0);
        (a, b)
    }

    pub fn shift_down(&self, a: usize, b: usize) -> Self {
        if a == 0 && b == 0 {
            return self.clone();
        }
        BPoly::from_coeffs(self.0[a.min(self.0.len())..].iter().map(|u| u.shift_down(b)).collect())
    }

    pub fn shift_up(&self, a: usize, b: usize) -> Self {
        if self.is_zero() || (a == 0 && b == 0) {
            return self.clone();
        }
        let mut v = vec![UPoly::zero(); a];
        v.extend(self.0.iter().map(|u| u.shift_up(b)));
        BPoly(v)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            match (self.0.get(k), other.0.get(k)) {
                (Some(a), Some(b)) => v.push(a.add(b)),
                (Some(a), None) => v.push(a.clone()),
                (None, Some(b)) => v.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        BPoly::from_coeffs(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BPoly(self.0.iter().map(UPoly::neg).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut v = vec![UPoly::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        BPoly::from_coeffs(v)
    }

    pub fn mul_u(&self, u: &UPoly) -> Self {
        BPoly::from_coeffs(self.0.iter().map(|c| c.mul(u)).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = BPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    fn div_u(&self, u: &UPoly) -> Option<Self> {
        let mut v = Vec::with_capacity(self.0.len());
        for c in &self.0 {
            v.push(c.div_exact(u)?);
        }
        Some(BPoly::from_coeffs(v))
    }

    /// Gcd in `Z[s]` of the `α`-coefficients.
    pub fn content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn lc(&self) -> Option<&UPoly> {
        self.0.last()
    }

    /// Primitive part with respect to `α` (content over `Z[s]` removed).
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        if c.is_one() {
            self.clone()
        } else {
            self.div_u(&c).expect("content divides")
        }
    }

    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().unwrap();
        let lcd = d.lc().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.lc().unwrap().clone();
            let mut v = r.mul_u(&lcd).0;
            for (j, dc) in d.0.iter().enumerate() {
                v[rd - dd + j] = v[rd - dd + j].sub(&lr.mul(dc));
            }
            r = BPoly::from_coeffs(v);
        }
        r
    }

    /// Exact quotient `self / d` in `Z[α, s]`, or `None` when inexact.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let dd = d.degree().unwrap();
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        if dd == 0 {
            return self.div_u(&d.0[0]);
        }
        let lcd = d.lc().unwrap();
        let mut rem = self.0.clone();
        let mut q = vec![UPoly::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let qc = rem[k + dd].div_exact(lcd)?;
            for (j, dc) in d.0.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&qc.mul(dc));
            }
            q[k] = qc;
        }
        if rem.iter().all(UPoly::is_zero) {
            Some(BPoly::from_coeffs(q))
        } else {
            None
        }
    }

    /// Gcd in `Z[α, s]`, up to sign.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_one() || other.is_one() {
            return BPoly::one();
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return BPoly::from_coeffs(vec![c]);
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.mul_u(&c)
    }
}
