use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{hat, TorusElement, TorusError};
use crate::bmw::IdempotentStore;
use crate::coeff::RatFn;
use crate::eval::TangleVector;
use crate::tangle::{wrap_braid, Slice, SliceWord};
use crate::young::{Cell, YoungDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RelKind {
    Prime,
    DoublePrime,
}

/// The two arcs of the meridian through `A` and `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Capping {
    Prime,
    DoublePrime,
}

/// An element of `K(S¹×D², AB)` in the generators `Q′_{λ,c}`, `Q″_{λ,c}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelTorusElement {
    coords: BTreeMap<(YoungDiagram, Cell, RelKind), RatFn>,
}

impl RelTorusElement {
    pub fn generator(lambda: YoungDiagram, c: Cell, kind: RelKind) -> Self {
        let mut z = Self::default();
        z.add_term(lambda, c, kind, RatFn::one());
        z
    }

    pub fn add_term(&mut self, lambda: YoungDiagram, c: Cell, kind: RelKind, v: RatFn) {
        let key = (lambda, c, kind);
        let v = self.coords.get(&key).cloned().unwrap_or_else(RatFn::zero).add(&v);
        if v.is_zero() {
            self.coords.remove(&key);
        } else {
            self.coords.insert(key, v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(YoungDiagram, Cell, RelKind), &RatFn)> {
        self.coords.iter()
    }
}

/// A relative generator realized as a square tangle vector whose last strand
/// is the arc from `A` (top) to `B` (bottom); all other strands are closed
/// around the core.
///
/// `Q′_{λ,c}` lives on `|λ|` strands: the projection `P` onto `ỹ_λ` with the
/// strand of `c` last, cut down by `ỹ_{λ′} ⊗ 1₁`. `Q″_{λ,c}` lives on
/// `|λ| + 1` strands, `(1 ⊗ h) (P ⊗ 1₁)`: the arc enters the `ỹ_λ` box as
/// the strand of `c` and goes once around the core.
#[derive(Clone, Debug)]
pub struct RelGenerator {
    pub lambda: YoungDiagram,
    pub cell: Cell,
    pub kind: RelKind,
    pub element: TangleVector,
}

/// The normalizing factors: `(⟨λ′⟩/⟨λ⟩)²` for `Q′`, `⟨λ′⟩/⟨λ⟩` for `Q″`.
pub(crate) fn normalization(store: &IdempotentStore, lambda: &YoungDiagram, c: Cell, kind: RelKind) -> Result<RatFn, TorusError> {
    let mu = lambda.remove_cell(c).map_err(|_| TorusError::InvalidCell(lambda.clone(), format!("{c}")))?;
    let r = store.qdim(&mu)?.div(&store.qdim(lambda)?).map_err(|_| TorusError::Decomposition)?;
    Ok(match kind {
        RelKind::Prime => r.mul(&r),
        RelKind::DoublePrime => r,
    })
}

/// The projection `P = f g / scalar` for the link `λ′ → λ`, without normalization.
pub(crate) fn projection(store: &IdempotentStore, lambda: &YoungDiagram, c: Cell) -> Result<TangleVector, TorusError> {
    let invalid = || TorusError::InvalidCell(lambda.clone(), format!("{c}"));
    if !lambda.extreme_cells().contains(&c) {
        return Err(invalid());
    }
    let mu = lambda.remove_cell(c).map_err(|_| invalid())?;
    let link = store.link(&mu, lambda)?;
    let inv = link.scalar.inv().map_err(|_| TorusError::Decomposition)?;
    Ok(store.algebra().mul(&link.f, &link.g)?.scale(&inv))
}

pub fn rel_generator(
    store: &IdempotentStore,
    lambda: &YoungDiagram,
    c: Cell,
    kind: RelKind,
) -> Result<RelGenerator, TorusError> {
    let p = projection(store, lambda, c)?;
    let nu = normalization(store, lambda, c, kind)?;
    let element = match kind {
        RelKind::Prime => p.scale(&nu),
        RelKind::DoublePrime => {
            let alg = store.algebra();
            let n = lambda.size();
            let hook = alg.reduce(&SliceWord::single(n + 1, Slice::Hook(n - 1)).expect("fits"));
            let pt = alg.tensor(&p, &TangleVector::identity(1));
            alg.mul(&hook, &pt)?.scale(&nu)
        }
    };
    Ok(RelGenerator {
        lambda: lambda.clone(),
        cell: c,
        kind,
        element,
    })
}

/// Caps the arc of a generator's realization: `γ′` closes it directly, `γ″`
/// first takes it once around every other strand crossing the meridian disk.
pub fn cap_element(store: &IdempotentStore, z: &TangleVector, side: Capping) -> Result<TorusElement, TorusError> {
    let alg = store.algebra();
    let closed = match side {
        Capping::Prime => alg.partial_trace(z),
        Capping::DoublePrime => {
            let w = alg.reduce(&wrap_braid(z.top()));
            alg.partial_trace(&alg.mul(z, &w)?)
        }
    };
    hat(store, &closed)
}

/// `Φ′` or `Φ″` of a relative element.
pub fn cap_phi(store: &IdempotentStore, z: &RelTorusElement, side: Capping) -> Result<TorusElement, TorusError> {
    let mut out = TorusElement::zero();
    for ((lambda, c, kind), v) in z.iter() {
        let g = rel_generator(store, lambda, *c, *kind)?;
        out = out.add(&cap_element(store, &g.element, side)?.scale(v));
    }
    Ok(out)
}
