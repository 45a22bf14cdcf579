use std::collections::HashMap;
use std::hash::Hash;
use std::path::PathBuf;
use std::sync::Arc;

use parking_lot::Mutex;

use super::algebra::{default_algebra, Algebra};
use super::hecke::{length, permutations, young_idempotent};
use super::persist;
use super::BmwError;
use crate::coeff::RatFn;
use crate::eval::{Matching, TangleVector};
use crate::tangle::{Slice, SliceWord};
use crate::young::{enumerate_updown, UpDownTableau, YoungDiagram};

/// A section idempotent `ỹ_λ` with its quantum dimension `⟨λ⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub lambda: YoungDiagram,
    pub idempotent: TangleVector,
    pub qdim: RatFn,
}

/// The morphisms joining `ỹ_μ ⊗ 1₁` to `ỹ_λ` for `λ = μ ± □`.
///
/// `f = (ỹ_μ ⊗ 1₁) X ỹ_λ` (with `ỹ_λ ⊗ ∪` when removing a cell) and
/// `g = ỹ_λ X⁻¹ (ỹ_μ ⊗ 1₁)` (with `ỹ_λ ⊗ ∩`), where `X` is the lift of
/// `braid`, the shortest permutation (then lexicographically first) giving
/// `g f = scalar · ỹ_λ` with `scalar ≠ 0`. Usually `braid` is the identity.
#[derive(Clone, Debug)]
pub struct Link {
    pub f: TangleVector,
    pub g: TangleVector,
    pub braid: Vec<usize>,
    pub scalar: RatFn,
}

/// The pair `(a_Λ, b_Λ)` with `b_Λ a_Λ = ỹ_{Λ_n}`.
#[derive(Clone, Debug)]
pub struct TabPair {
    pub a: TangleVector,
    pub b: TangleVector,
}

type Slot<V> = Arc<Mutex<Option<Arc<V>>>>;

/// Looks `key` up, computing it at most once even under concurrent callers:
/// the per-key lock is held while computing, so others wait for the result.
/// Failures are not cached.
fn single_flight<K: Clone + Eq + Hash, V>(
    map: &Mutex<HashMap<K, Slot<V>>>,
    key: &K,
    compute: impl FnOnce() -> Result<V, BmwError>,
) -> Result<Arc<V>, BmwError> {
    let slot = map.lock().entry(key.clone()).or_default().clone();
    let mut guard = slot.lock();
    if let Some(v) = guard.as_ref() {
        return Ok(v.clone());
    }
    let v = Arc::new(compute()?);
    *guard = Some(v.clone());
    Ok(v)
}

/// Idempotents, tableau morphisms and quantum dimensions, each computed at
/// most once per process and optionally persisted to a cache directory.
pub struct IdempotentStore {
    alg: &'static Algebra,
    max_n: usize,
    cache_dir: Option<PathBuf>,
    sections: Mutex<HashMap<YoungDiagram, Slot<Section>>>,
    units: Mutex<HashMap<usize, Slot<TangleVector>>>,
    links: Mutex<HashMap<(YoungDiagram, YoungDiagram), Slot<Link>>>,
    tabs: Mutex<HashMap<UpDownTableau, Slot<TabPair>>>,
}

impl IdempotentStore {
    pub fn new(max_n: usize, cache_dir: Option<PathBuf>) -> Self {
        IdempotentStore {
            alg: default_algebra(),
            max_n,
            cache_dir,
            sections: Mutex::default(),
            units: Mutex::default(),
            links: Mutex::default(),
            tabs: Mutex::default(),
        }
    }

    pub fn algebra(&self) -> &'static Algebra {
        self.alg
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn check(&self, n: usize) -> Result<(), BmwError> {
        if n > self.max_n {
            Err(BmwError::TooLarge { n, max: self.max_n })
        } else {
            Ok(())
        }
    }

    /// `ỹ_λ` and `⟨λ⟩`.
    pub fn section(&self, lambda: &YoungDiagram) -> Result<Arc<Section>, BmwError> {
        self.check(lambda.size())?;
        single_flight(&self.sections, lambda, || {
            if let Some(dir) = &self.cache_dir {
                if let Some(s) = persist::load_section(dir, lambda) {
                    return Ok(s);
                }
            }
            let s = self.compute_section(lambda)?;
            if let Some(dir) = &self.cache_dir {
                // a failed write only costs a recomputation later
                let _ = persist::save_section(dir, &s);
            }
            Ok(s)
        })
    }

    fn compute_section(&self, lambda: &YoungDiagram) -> Result<Section, BmwError> {
        let n = lambda.size();
        let idempotent = if n <= 1 {
            TangleVector::identity(n)
        } else {
            let y = young_idempotent(self.alg, lambda)?;
            // E·y = Σ a_Λ (b_Λ y): the factors pass through fewer strands and
            // carry far simpler coefficients than the assembled unit
            let mut parts = Vec::new();
            for t in enumerate_updown(n, None) {
                if t.shape().size() < n {
                    let p = self.tab_morphisms(&t)?;
                    parts.push(self.alg.mul(&p.a, &self.alg.mul(&p.b, &y)?)?);
                }
            }
            let ey = TangleVector::linear_combination(n, n, parts.iter().map(|v| (RatFn::one(), v)));
            y.sub(&ey)
        };
        let qdim = self.alg.trace(&idempotent);
        if qdim.is_zero() {
            return Err(BmwError::Singular);
        }
        Ok(Section {
            lambda: lambda.clone(),
            idempotent,
            qdim,
        })
    }

    pub fn qdim(&self, lambda: &YoungDiagram) -> Result<RatFn, BmwError> {
        Ok(self.section(lambda)?.qdim.clone())
    }

    /// The unit of the ideal `I_n`: `Σ a_Λ b_Λ` over tableaux of length `n`
    /// ending below size `n`.
    pub fn ideal_unit(&self, n: usize) -> Result<Arc<TangleVector>, BmwError> {
        self.check(n)?;
        single_flight(&self.units, &n, || {
            let mut parts = Vec::new();
            for t in enumerate_updown(n, None) {
                if t.shape().size() < n {
                    let p = self.tab_morphisms(&t)?;
                    parts.push(self.alg.mul(&p.a, &p.b)?);
                }
            }
            Ok(TangleVector::linear_combination(n, n, parts.iter().map(|v| (RatFn::one(), v))))
        })
    }

    /// The connecting morphisms from `ỹ_μ ⊗ 1₁` to `ỹ_λ`.
    pub fn link(&self, mu: &YoungDiagram, lambda: &YoungDiagram) -> Result<Arc<Link>, BmwError> {
        self.check(mu.size() + 1)?;
        single_flight(&self.links, &(mu.clone(), lambda.clone()), || {
            self.compute_link(mu, lambda)
        })
    }

    fn compute_link(&self, mu: &YoungDiagram, lambda: &YoungDiagram) -> Result<Link, BmwError> {
        let alg = self.alg;
        let m = mu.size();
        let up = lambda.size() == m + 1;
        assert!(up || lambda.size() + 1 == m, "shapes must differ by one cell");
        let ym = alg.tensor(&self.section(mu)?.idempotent, &TangleVector::identity(1));
        let yl = self.section(lambda)?.idempotent.clone();
        let (right, left) = if up {
            (yl.clone(), yl.clone())
        } else {
            let cup = alg.reduce(&SliceWord::new(2, vec![Slice::Cup(0)]).unwrap());
            let cap = alg.reduce(&SliceWord::new(0, vec![Slice::Cap(0)]).unwrap());
            (alg.tensor(&yl, &cup), alg.tensor(&yl, &cap))
        };
        let mut perms = permutations(m + 1);
        perms.sort_by_key(|p| (length(p), p.clone()));
        for braid in perms {
            let pm = Matching::from_permutation(&braid);
            let x = TangleVector::basis(pm.clone());
            let xi = alg.reduce(&pm.canonical_lift().inverse());
            let f = alg.mul_all(&[&ym, &x, &right])?;
            let g = alg.mul_all(&[&left, &xi, &ym])?;
            let gf = alg.mul(&g, &f)?;
            if gf.is_zero() {
                continue;
            }
            let (k, c) = yl.iter().next().expect("nonzero idempotent");
            let scalar = gf.get(k).div(c).map_err(|_| BmwError::Singular)?;
            if gf != yl.scale(&scalar) {
                return Err(BmwError::Singular);
            }
            return Ok(Link { f, g, braid, scalar });
        }
        Err(BmwError::Singular)
    }

    /// `(a_Λ, b_Λ)`: `a_Λ = (a_{Λ'} ⊗ 1₁) f / scalar`, `b_Λ = g (b_{Λ'} ⊗ 1₁)`.
    pub fn tab_morphisms(&self, t: &UpDownTableau) -> Result<Arc<TabPair>, BmwError> {
        self.check(t.len())?;
        single_flight(&self.tabs, t, || {
            let Some(parent) = t.parent() else {
                return Ok(TabPair {
                    a: TangleVector::identity(1),
                    b: TangleVector::identity(1),
                });
            };
            let p = self.tab_morphisms(&parent)?;
            let link = self.link(parent.shape(), t.shape())?;
            let id1 = TangleVector::identity(1);
            let alg = self.alg;
            let inv = link.scalar.inv().map_err(|_| BmwError::Singular)?;
            let a = alg.mul(&alg.tensor(&p.a, &id1), &link.f)?.scale(&inv);
            let b = alg.mul(&link.g, &alg.tensor(&p.b, &id1))?;
            Ok(TabPair { a, b })
        })
    }
}
