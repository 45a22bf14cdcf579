//! The skein engine: Kauffman polynomial of closed diagrams and reduction
//! of tangles to canonical lifts of Brauer matchings.

mod engine;
mod lift;
mod poly;
mod vector;

use std::sync::OnceLock;

use thiserror::Error;

pub use engine::{Engine, Strategy, Value};
pub use lift::Matching;
pub use poly::SkeinPoly;
pub use vector::TangleVector;

use crate::coeff::RatFn;
use crate::tangle::{closure, Ambient, Diagram, LinkDiagram, SliceWord};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("{n} strands exceeds the configured limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("the Kauffman polynomial needs a diagram in the plane")]
    NotPlanar,
}

/// Default upper bound on strand counts for basis enumeration.
pub const DEFAULT_MAX_N: usize = 4;

/// The shared memoizing engine.
pub fn default_engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(|| Engine::new(Strategy::FirstViolation, true))
}

/// Kauffman polynomial of a closed planar diagram, blackboard framing.
pub fn kauffman(d: &LinkDiagram) -> Result<RatFn, EvalError> {
    if d.ambient != Ambient::Plane {
        return Err(EvalError::NotPlanar);
    }
    Ok(kauffman_diagram(default_engine(), &d.diagram))
}

pub fn kauffman_diagram(engine: &Engine, d: &Diagram) -> RatFn {
    debug_assert_eq!(d.nb(), 0);
    let v = engine.evaluate(d);
    v.values().next().map_or_else(RatFn::zero, SkeinPoly::to_ratfn)
}

/// Kauffman polynomial of the plane closure of a square word.
pub fn kauffman_closure(w: &SliceWord) -> RatFn {
    let d = closure(w, Ambient::Plane).expect("square word");
    kauffman_diagram(default_engine(), &d.diagram)
}

/// Coordinates of a tangle word over the canonical lifts of its boundary.
pub fn reduce_tangle(t: &SliceWord) -> TangleVector {
    reduce_with(default_engine(), t)
}

pub fn reduce_with(engine: &Engine, t: &SliceWord) -> TangleVector {
    let v = engine.evaluate(&Diagram::from_word(t));
    TangleVector::from_value(t.top(), t.bottom(), &v)
}

/// A matching with its canonical lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerLift {
    pub matching: Matching,
    pub word: SliceWord,
}

/// All `(2n−1)!!` matchings of `n + n` points with their canonical lifts.
pub fn brauer_basis(n: usize, max_n: usize) -> Result<Vec<BrauerLift>, EvalError> {
    if n > max_n {
        return Err(EvalError::TooLarge { n, max: max_n });
    }
    Ok(Matching::all(n, n)
        .into_iter()
        .map(|m| BrauerLift {
            word: m.canonical_lift(),
            matching: m,
        })
        .collect())
}

#[cfg(test)]
mod tests;
