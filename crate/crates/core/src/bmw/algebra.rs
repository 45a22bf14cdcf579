use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use parking_lot::Mutex;

use super::BmwError;
use crate::coeff::RatFn;
use crate::eval::{default_engine, kauffman_closure, reduce_with, Engine, Matching, TangleVector};
use crate::tangle::{Slice, SliceWord};

/// Multiplication, juxtaposition and trace on tangle vectors, with the
/// results on pairs of canonical lifts cached.
pub struct Algebra {
    engine: &'static Engine,
    products: Mutex<HashMap<(Matching, Matching), Arc<TangleVector>>>,
    tensors: Mutex<HashMap<(Matching, Matching), Arc<TangleVector>>>,
    traces: Mutex<HashMap<Matching, RatFn>>,
}

pub fn default_algebra() -> &'static Algebra {
    static ALG: OnceLock<Algebra> = OnceLock::new();
    ALG.get_or_init(|| Algebra::new(default_engine()))
}

impl Algebra {
    pub fn new(engine: &'static Engine) -> Self {
        Algebra {
            engine,
            products: Mutex::new(HashMap::new()),
            tensors: Mutex::new(HashMap::new()),
            traces: Mutex::new(HashMap::new()),
        }
    }

    pub fn engine(&self) -> &Engine {
        self.engine
    }

    /// Reduces a word to the canonical-lift basis.
    pub fn reduce(&self, w: &SliceWord) -> TangleVector {
        reduce_with(self.engine, w)
    }

    fn lift_product(&self, u: &Matching, v: &Matching) -> Arc<TangleVector> {
        let key = (u.clone(), v.clone());
        if let Some(x) = self.products.lock().get(&key) {
            return x.clone();
        }
        let w = u
            .canonical_lift()
            .compose(&v.canonical_lift())
            .expect("boundaries agree");
        let x = Arc::new(self.reduce(&w));
        self.products.lock().entry(key).or_insert(x).clone()
    }

    fn lift_tensor(&self, u: &Matching, v: &Matching) -> Arc<TangleVector> {
        let key = (u.clone(), v.clone());
        if let Some(x) = self.tensors.lock().get(&key) {
            return x.clone();
        }
        let w = u.canonical_lift().tensor(&v.canonical_lift());
        let x = Arc::new(self.reduce(&w));
        self.tensors.lock().entry(key).or_insert(x).clone()
    }

    /// `x` stacked on top of `y`.
    pub fn mul(&self, x: &TangleVector, y: &TangleVector) -> Result<TangleVector, BmwError> {
        if x.bottom() != y.top() {
            return Err(BmwError::Mismatch {
                upper: x.bottom(),
                lower: y.top(),
            });
        }
        let mut parts = Vec::with_capacity(x.len() * y.len());
        for (u, cu) in x.iter() {
            for (v, cv) in y.iter() {
                parts.push((cu.mul(cv), self.lift_product(u, v)));
            }
        }
        Ok(TangleVector::linear_combination(
            x.top(),
            y.bottom(),
            parts.iter().map(|(c, p)| (c.clone(), &**p)),
        ))
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, xs: &[&TangleVector]) -> Result<TangleVector, BmwError> {
        let (first, rest) = xs.split_first().expect("at least one factor");
        let mut acc = (*first).clone();
        for x in rest {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `x` to the left of `y`.
    pub fn tensor(&self, x: &TangleVector, y: &TangleVector) -> TangleVector {
        let mut out = TangleVector::zero(x.top() + y.top(), x.bottom() + y.bottom());
        for (u, cu) in x.iter() {
            for (v, cv) in y.iter() {
                out.add_scaled(&self.lift_tensor(u, v), &cu.mul(cv));
            }
        }
        out
    }

    /// Kauffman polynomial of the plane closure (the Markov trace).
    pub fn trace(&self, x: &TangleVector) -> RatFn {
        assert_eq!(x.top(), x.bottom(), "trace of a square element");
        let mut out = RatFn::zero();
        for (u, c) in x.iter() {
            let t = {
                let cached = self.traces.lock().get(u).cloned();
                match cached {
                    Some(t) => t,
                    None => {
                        let t = kauffman_closure(&u.canonical_lift());
                        self.traces.lock().insert(u.clone(), t.clone());
                        t
                    }
                }
            };
            out = out.add(&c.mul(&t));
        }
        out
    }

    /// Closes the rightmost strand of a square element around the right:
    /// `(1 ⊗ ∩) · (x ⊗ 1₁) · (1 ⊗ ∪)`.
    pub fn partial_trace(&self, x: &TangleVector) -> TangleVector {
        let n = x.top();
        assert!(n >= 1 && x.bottom() == n);
        let cap = self.reduce(&SliceWord::new(n - 1, vec![Slice::Cap(n - 1)]).unwrap());
        let cup = self.reduce(&SliceWord::new(n + 1, vec![Slice::Cup(n - 1)]).unwrap());
        let xt = self.tensor(x, &TangleVector::identity(1));
        self.mul_all(&[&cap, &xt, &cup]).expect("shapes agree")
    }
}

/// The element of a word with one slice on `n` strands.
pub fn generator(alg: &Algebra, n: usize, s: Slice) -> TangleVector {
    alg.reduce(&SliceWord::single(n, s).expect("slice fits"))
}

/// `π`: keeps the coordinates on permutation lifts.
pub fn project_pi(x: &TangleVector) -> TangleVector {
    x.restricted(Matching::is_permutation)
}

/// Product in the Hecke quotient of two permutation-supported elements.
pub fn hecke_mul(alg: &Algebra, x: &TangleVector, y: &TangleVector) -> Result<TangleVector, BmwError> {
    Ok(project_pi(&alg.mul(&project_pi(x), &project_pi(y))?))
}
