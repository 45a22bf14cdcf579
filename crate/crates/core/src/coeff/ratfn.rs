use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{write_terms, BiLaurent};
use super::poly::BPoly;
use super::CoeffError;

/// An element of `Q(α, s)` in canonical reduced form.
///
/// The value is `α^a_shift · s^s_shift · num / den` where `num`, `den` are
/// integer polynomials divisible by neither `α` nor `s`, `gcd(num, den) = 1`
/// in `Z[α, s]` (integer content included), and the leading coefficient of
/// `den` under grlex (`α > s`) is positive. Zero is `0 / 1` with no shift.
/// Structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    a_shift: i32,
    s_shift: i32,
    num: BPoly,
    den: BPoly,
}

impl RatFn {
    pub fn zero() -> Self {
        RatFn {
            a_shift: 0,
            s_shift: 0,
            num: BPoly::zero(),
            den: BPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0, 0)
    }

    /// `c · α^a · s^s`
    pub fn monomial(c: BigInt, a: i32, s: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFn {
            a_shift: a,
            s_shift: s,
            num: BPoly::constant(c),
            den: BPoly::one(),
        }
    }

    pub fn alpha() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn s() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `α^k`
    pub fn alpha_pow(k: i32) -> Self {
        Self::monomial(BigInt::one(), k, 0)
    }

    /// `s^k`
    pub fn s_pow(k: i32) -> Self {
        Self::monomial(BigInt::one(), 0, k)
    }

    /// `s − s⁻¹`, the skein coefficient.
    pub fn z() -> Self {
        Self::s().sub(&Self::s_pow(-1))
    }

    /// The value of a split trivial circle: `(α − α⁻¹)/(s − s⁻¹) + 1`.
    pub fn loop_value() -> Self {
        let a = Self::alpha().sub(&Self::alpha_pow(-1));
        a.div(&Self::z()).expect("s - 1/s is nonzero").add(&Self::one())
    }

    /// Converts a Laurent polynomial with rational coefficients.
    pub fn from_bilaurent(p: &BiLaurent) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let (amin, smin) = p.min_exponents();
        let l = p.denominator_lcm();
        let ints: Vec<(usize, usize, BigInt)> = p
            .terms()
            .map(|((a, s), c)| {
                let v = c * BigRational::from_integer(l.clone());
                ((a - amin) as usize, (s - smin) as usize, v.to_integer())
            })
            .collect();
        let num = BPoly::from_terms(ints.iter().map(|(a, s, c)| (*a, *s, c)));
        Self::from_parts(amin, smin, num, BPoly::constant(l))
    }

    /// Builds `α^a s^s num / den` and reduces it to canonical form.
    pub fn from_parts(a: i32, s: i32, num: BPoly, den: BPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize(a, s, num, den)
    }

    /// Monomial extraction and sign normalization of an already coprime pair.
    fn normalize(mut a: i32, mut s: i32, num: BPoly, den: BPoly) -> Self {
        let (na, ns) = num.monomial_content();
        let (da, ds) = den.monomial_content();
        a += na as i32 - da as i32;
        s += ns as i32 - ds as i32;
        let mut num = num.shift_down(na, ns);
        let mut den = den.shift_down(da, ds);
        if den.leading_grlex().unwrap().2.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFn {
            a_shift: a,
            s_shift: s,
            num,
            den,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a_shift == 0 && self.s_shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// Field semantics: everything but zero is a unit.
    pub fn is_invertible(&self) -> bool {
        !self.is_zero()
    }

    /// True when the denominator is a unit monomial (a Laurent polynomial).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let a = self.a_shift.min(other.a_shift);
        let s = self.s_shift.min(other.s_shift);
        let n1 = self
            .num
            .shift_up((self.a_shift - a) as usize, (self.s_shift - s) as usize);
        let n2 = other
            .num
            .shift_up((other.a_shift - a) as usize, (other.s_shift - s) as usize);
        if self.den == other.den {
            let num = n1.add(&n2);
            if self.den.is_one() {
                if num.is_zero() {
                    return Self::zero();
                }
                return Self::normalize(a, s, num, BPoly::one());
            }
            return Self::from_parts(a, s, num, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = other.den.div_exact(&g).expect("gcd divides");
        let num = n1.mul(&d2).add(&n2.mul(&d1));
        if num.is_zero() {
            return Self::zero();
        }
        // Any common factor of num and d1·d2·g must divide g.
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (num.div_exact(&h).unwrap(), g.div_exact(&h).unwrap())
        };
        Self::normalize(a, s, num, d1.mul(&d2).mul(&g))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let a = self.a_shift + other.a_shift;
        let s = self.s_shift + other.s_shift;
        if self.den.is_one() && other.den.is_one() {
            return Self::normalize(a, s, self.num.mul(&other.num), BPoly::one());
        }
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Self::normalize(a, s, n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalize(
            -self.a_shift,
            -self.s_shift,
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self, CoeffError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Numerator as a Laurent polynomial, normalized so that the
    /// denominator returned by [`RatFn::denominator`] is monic.
    pub fn numerator(&self) -> BiLaurent {
        let lc = self.den_lc();
        self.terms_of(&self.num, self.a_shift, self.s_shift, &lc)
    }

    /// Denominator as an ordinary polynomial with grlex-leading coefficient 1.
    pub fn denominator(&self) -> BiLaurent {
        let lc = self.den_lc();
        self.terms_of(&self.den, 0, 0, &lc)
    }

    fn den_lc(&self) -> BigInt {
        self.den.leading_grlex().unwrap().2.clone()
    }

    fn terms_of(&self, p: &BPoly, a: i32, s: i32, lc: &BigInt) -> BiLaurent {
        BiLaurent::from_terms(p.terms().map(|(i, j, c)| {
            (
                (i as i32 + a, j as i32 + s),
                BigRational::new(c.clone(), lc.clone()),
            )
        }))
    }

    /// Substitutes `α ↦ 1/α`, `s ↦ 1/s`.
    /// Number of terms in numerator and denominator, a cheap size measure.
    pub fn size(&self) -> usize {
        self.num.terms().count() + self.den.terms().count()
    }

    /// Value at `α = a`, `s = b` modulo the prime `p`, `None` where the
    /// denominator vanishes. Nonzero `a`, `b` are required.
    pub fn eval_mod(&self, a: u64, b: u64, p: u64) -> Option<u64> {
        let ev = |q: &BPoly| -> u64 {
            let mut acc = 0u128;
            let mut apow = 1u128;
            for row in q.coeffs() {
                let mut r = 0u128;
                let mut bpow = 1u128;
                for c in row.coeffs() {
                    let m = c.mod_floor(&BigInt::from(p));
                    let m: u128 = m.try_into().expect("reduced mod p");
                    r = (r + m * bpow) % p as u128;
                    bpow = bpow * b as u128 % p as u128;
                }
                acc = (acc + r * apow) % p as u128;
                apow = apow * a as u128 % p as u128;
            }
            acc as u64
        };
        let d = ev(&self.den);
        if d == 0 {
            return None;
        }
        let n = ev(&self.num) as u128;
        let pw = |x: u64, k: i32| -> u128 {
            let base = if k < 0 { mod_inv(x, p) } else { x };
            mod_pow(base, k.unsigned_abs() as u64, p) as u128
        };
        let v = n * pw(a, self.a_shift) % p as u128 * pw(b, self.s_shift) % p as u128;
        Some((v * mod_inv(d, p) as u128 % p as u128) as u64)
    }

    pub fn invert_variables(&self) -> Self {
        let flip = |p: &BPoly| -> (BPoly, i32, i32) {
            let da = p.degree().unwrap_or(0);
            let ds = p.terms().map(|t| t.1).max().unwrap_or(0);
            let q = BPoly::from_terms(p.terms().map(|(i, j, c)| (da - i, ds - j, c)));
            (q, da as i32, ds as i32)
        };
        let (n, na, ns) = flip(&self.num);
        let (d, da, ds) = flip(&self.den);
        Self::from_parts(-self.a_shift - na + da, -self.s_shift - ns + ds, n, d)
    }
}

fn cancel(n: &BPoly, d: &BPoly) -> (BPoly, BPoly) {
    if d.is_one() {
        return (n.clone(), d.clone());
    }
    let g = n.gcd(d);
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
    }
}

/// A sum of products `Σ xᵢ·yᵢ` reduced once at the end.
///
/// Terms are bucketed by their (unreduced) denominator; within a bucket
/// numerators add as polynomials, so only one gcd per distinct denominator
/// is paid instead of one per addition.
#[derive(Clone, Debug, Default)]
pub struct LazySum {
    parts: HashMap<BPoly, (i32, i32, BPoly)>,
}

impl LazySum {
    pub fn add_product(&mut self, x: &RatFn, y: &RatFn) {
        if x.is_zero() || y.is_zero() {
            return;
        }
        let den = match (x.den.is_one(), y.den.is_one()) {
            (true, _) => y.den.clone(),
            (_, true) => x.den.clone(),
            _ => x.den.mul(&y.den),
        };
        let (a, s) = (x.a_shift + y.a_shift, x.s_shift + y.s_shift);
        let num = x.num.mul(&y.num);
        match self.parts.entry(den) {
            Entry::Vacant(v) => {
                v.insert((a, s, num));
            }
            Entry::Occupied(mut o) => {
                let (a0, s0, n0) = o.get_mut();
                let (am, sm) = ((*a0).min(a), (*s0).min(s));
                *n0 = n0
                    .shift_up((*a0 - am) as usize, (*s0 - sm) as usize)
                    .add(&num.shift_up((a - am) as usize, (s - sm) as usize));
                (*a0, *s0) = (am, sm);
            }
        }
    }

    pub fn add(&mut self, x: &RatFn) {
        self.add_product(x, &RatFn::one());
    }

    /// Brings every bucket over the lcm of the denominators, so the only
    /// gcd involving the (large) numerator is the final one.
    pub fn finish(self) -> RatFn {
        let parts: Vec<(BPoly, (i32, i32, BPoly))> =
            self.parts.into_iter().filter(|(_, (_, _, n))| !n.is_zero()).collect();
        match parts.len() {
            0 => return RatFn::zero(),
            1 => {
                let (den, (a, s, num)) = parts.into_iter().next().unwrap();
                return RatFn::from_parts(a, s, num, den);
            }
            _ => {}
        }
        let mut lcm = BPoly::one();
        for (d, _) in &parts {
            let g = lcm.gcd(d);
            lcm = lcm.mul(&d.div_exact(&g).expect("gcd divides"));
        }
        let am = parts.iter().map(|(_, p)| p.0).min().unwrap();
        let sm = parts.iter().map(|(_, p)| p.1).min().unwrap();
        let mut num = BPoly::zero();
        for (d, (a, s, n)) in &parts {
            let cofactor = lcm.div_exact(d).expect("lcm is a multiple");
            num = num.add(&n.shift_up((a - am) as usize, (s - sm) as usize).mul(&cofactor));
        }
        if num.is_zero() {
            return RatFn::zero();
        }
        RatFn::from_parts(am, sm, num, lcm)
    }
}

impl Default for RatFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RatFn {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl<'a> Add<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn add(self, rhs: &'a RatFn) -> RatFn {
        RatFn::add(self, rhs)
    }
}

impl<'a> Sub<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &'a RatFn) -> RatFn {
        RatFn::sub(self, rhs)
    }
}

impl<'a> Mul<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &'a RatFn) -> RatFn {
        RatFn::mul(self, rhs)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn::neg(self)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator().sorted_terms();
        let den = self.denominator();
        if den == BiLaurent::one() {
            return write_terms(f, &num);
        }
        if num.len() > 1 {
            write!(f, "(")?;
            write_terms(f, &num)?;
            write!(f, ")")?;
        } else {
            write_terms(f, &num)?;
        }
        write!(f, "/(")?;
        write_terms(f, &den.sorted_terms())?;
        write!(f, ")")
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

/// One term of a serialized polynomial.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TermJson {
    pub a_exp: i32,
    pub s_exp: i32,
    pub num: String,
    pub den: String,
}

#[derive(Serialize, Deserialize)]
struct RatFnJson {
    num: Vec<TermJson>,
    den: Vec<TermJson>,
}

fn to_json_terms(p: &BiLaurent) -> Vec<TermJson> {
    p.sorted_terms()
        .into_iter()
        .map(|((a, s), c)| TermJson {
            a_exp: a,
            s_exp: s,
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        })
        .collect()
}

fn from_json_terms(terms: &[TermJson]) -> Result<BiLaurent, String> {
    let mut out = BiLaurent::zero();
    for t in terms {
        let n: BigInt = t.num.parse().map_err(|e| format!("bad numerator {:?}: {e}", t.num))?;
        let d: BigInt = t.den.parse().map_err(|e| format!("bad denominator {:?}: {e}", t.den))?;
        if d.is_zero() {
            return Err("zero coefficient denominator".into());
        }
        out.add_term((t.a_exp, t.s_exp), BigRational::new(n, d));
    }
    Ok(out)
}

impl Serialize for RatFn {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        RatFnJson {
            num: to_json_terms(&self.numerator()),
            den: to_json_terms(&self.denominator()),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for RatFn {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RatFnJson::deserialize(de)?;
        let num = from_json_terms(&raw.num).map_err(D::Error::custom)?;
        let den = from_json_terms(&raw.den).map_err(D::Error::custom)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        RatFn::from_bilaurent(&num)
            .div(&RatFn::from_bilaurent(&den))
            .map_err(D::Error::custom)
    }
}

pub(crate) fn mod_pow(mut x: u64, mut k: u64, p: u64) -> u64 {
    let mut r = 1u128;
    let mut b = (x % p) as u128;
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % p as u128;
        }
        b = b * b % p as u128;
        k >>= 1;
    }
    x = r as u64;
    x
}

pub(crate) fn mod_inv(x: u64, p: u64) -> u64 {
    mod_pow(x, p - 2, p)
}
