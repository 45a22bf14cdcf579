//! The skein module of the solid torus with basis `ŷ̃_λ`, the relative module
//! with two boundary points, and the handle-slide quotient presenting `S¹×S²`.

mod relative;
mod report;

pub use relative::{cap_element, cap_phi, rel_generator, Capping, RelGenerator, RelKind, RelTorusElement};
pub use report::{fit_convention, resolve_convention, s1s2_report, Convention, HandleSlideReport, Membership, ReportRow};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bmw::{BmwError, IdempotentStore};
use crate::coeff::RatFn;
use crate::eval::{Matching, TangleVector};
use crate::linalg;
use crate::young::{enumerate_updown, YoungDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TorusError {
    #[error(transparent)]
    Bmw(#[from] BmwError),
    #[error("({0}, {1}) is not a partition with an extreme cell")]
    InvalidCell(YoungDiagram, String),
    #[error("cannot decompose the element in the tableau basis")]
    Decomposition,
    #[error("convention bits disagree: {0}")]
    Convention(String),
}

/// An element of `K(S¹×D²)` in the basis `ŷ̃_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<(YoungDiagram, RatFn)>", from = "Vec<(YoungDiagram, RatFn)>")]
pub struct TorusElement {
    coords: BTreeMap<YoungDiagram, RatFn>,
}

impl From<TorusElement> for Vec<(YoungDiagram, RatFn)> {
    fn from(t: TorusElement) -> Self {
        t.coords.into_iter().collect()
    }
}

impl From<Vec<(YoungDiagram, RatFn)>> for TorusElement {
    fn from(v: Vec<(YoungDiagram, RatFn)>) -> Self {
        let mut t = TorusElement::zero();
        for (l, c) in v {
            t.add_term(l, c);
        }
        t
    }
}

impl TorusElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(lambda: YoungDiagram) -> Self {
        Self::term(lambda, RatFn::one())
    }

    pub fn term(lambda: YoungDiagram, c: RatFn) -> Self {
        let mut t = Self::zero();
        t.add_term(lambda, c);
        t
    }

    pub fn add_term(&mut self, lambda: YoungDiagram, c: RatFn) {
        if c.is_zero() {
            return;
        }
        let v = self.get(&lambda).add(&c);
        if v.is_zero() {
            self.coords.remove(&lambda);
        } else {
            self.coords.insert(lambda, v);
        }
    }

    pub fn get(&self, lambda: &YoungDiagram) -> RatFn {
        self.coords.get(lambda).cloned().unwrap_or_else(RatFn::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&YoungDiagram, &RatFn)> {
        self.coords.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RatFn::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFn) -> Self {
        let mut out = Self::zero();
        for (k, v) in self.iter() {
            out.add_term(k.clone(), v.mul(c));
        }
        out
    }

    /// The coordinates along `shapes`, in order.
    pub fn dense(&self, shapes: &[YoungDiagram]) -> Vec<RatFn> {
        shapes.iter().map(|l| self.get(l)).collect()
    }

    /// `Σ c_λ ⟨λ⟩`: the image under the standard embedding into `S³`.
    pub fn markov(&self, store: &IdempotentStore) -> Result<RatFn, TorusError> {
        let mut out = RatFn::zero();
        for (l, c) in self.iter() {
            out = out.add(&c.mul(&store.qdim(l)?));
        }
        Ok(out)
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.iter().map(|(l, c)| format!("({c})·ŷ{l}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The coefficient `k` with `x = k·y`, `y` nonzero.
pub(crate) fn ratio(x: &TangleVector, y: &TangleVector) -> Option<RatFn> {
    let (m, c) = y.iter().next()?;
    let k = x.get(m).div(c).ok()?;
    (x == &y.scale(&k)).then_some(k)
}

/// The annulus closure of `x ∈ K_n`.
///
/// In the matrix-unit basis `x = Σ c_{ΛΓ} a_Λ b_Γ`, closing kills the
/// off-diagonal terms and sends `a_Λ b_Λ` to `ŷ̃_{Λ_n}`; the diagonal
/// coefficients are read off as `b_Λ x a_Λ = c_{ΛΛ} ỹ_{Λ_n}`.
pub fn hat(store: &IdempotentStore, x: &TangleVector) -> Result<TorusElement, TorusError> {
    let n = x.top();
    assert_eq!(n, x.bottom(), "hat of a square element");
    if n == 0 {
        return Ok(TorusElement::term(YoungDiagram::empty(), x.get(&Matching::identity(0))));
    }
    let alg = store.algebra();
    let mut out = TorusElement::zero();
    for t in enumerate_updown(n, None) {
        let p = store.tab_morphisms(&t)?;
        let y = &store.section(t.shape())?.idempotent;
        let c = alg.mul_all(&[&p.b, x, &p.a])?;
        if c.is_zero() {
            continue;
        }
        out.add_term(t.shape().clone(), ratio(&c, y).ok_or(TorusError::Decomposition)?);
    }
    Ok(out)
}

/// `hat` by an exact solve for all coordinates `c_{ΛΓ}`; the independent
/// route, practical for `n ≤ 3`.
pub fn hat_by_solve(store: &IdempotentStore, x: &TangleVector) -> Result<TorusElement, TorusError> {
    let n = x.top();
    let alg = store.algebra();
    let tabs = enumerate_updown(n, None);
    let basis = Matching::all(n, n);
    let mut cols = Vec::new();
    let mut labels = Vec::new();
    for l in &tabs {
        for g in &tabs {
            if l.shape() != g.shape() {
                continue;
            }
            let v = alg.mul(&store.tab_morphisms(l)?.a, &store.tab_morphisms(g)?.b)?;
            cols.push(basis.iter().map(|m| v.get(m)).collect::<Vec<_>>());
            labels.push((l == g).then(|| l.shape().clone()));
        }
    }
    let rows: Vec<Vec<RatFn>> = (0..basis.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let b: Vec<RatFn> = basis.iter().map(|m| x.get(m)).collect();
    let (sol, nullity) = linalg::solve(&rows, &b).map_err(|_| TorusError::Decomposition)?;
    if nullity != 0 {
        return Err(TorusError::Decomposition);
    }
    let mut out = TorusElement::zero();
    for (c, l) in sol.into_iter().zip(labels) {
        if let Some(l) = l {
            out.add_term(l, c);
        }
    }
    Ok(out)
}

/// Encircles the closure of `x ∈ K_n` by one meridian: the result in `K_n`
/// is `ε_{n+1}((x ⊗ 1₁) · W)`, `W` taking the new strand once around the rest.
pub fn meridian(store: &IdempotentStore, x: &TangleVector) -> Result<TangleVector, TorusError> {
    let alg = store.algebra();
    let n = x.top();
    let w = alg.reduce(&crate::tangle::wrap_braid(n + 1));
    let xt = alg.tensor(x, &TangleVector::identity(1));
    Ok(alg.partial_trace(&alg.mul(&xt, &w)?))
}

/// The meridian eigenvalue on `ŷ̃_λ`: `meridian(ỹ_λ) = t_λ ỹ_λ`.
pub fn meridian_eigenvalue(store: &IdempotentStore, lambda: &YoungDiagram) -> Result<RatFn, TorusError> {
    let y = &store.section(lambda)?.idempotent;
    ratio(&meridian(store, y)?, y).ok_or(TorusError::Decomposition)
}

#[cfg(test)]
mod tests;
