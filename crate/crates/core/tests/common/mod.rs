//! Shared helpers and independent oracles for the integration tests.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use skein::tangle::{CrossKind, Diagram, Slice, SliceWord, Smoothing};

pub const P: u64 = 1_000_000_007;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn pow_mod(mut x: u64, mut k: u64, p: u64) -> u64 {
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

pub fn inv_mod(x: u64, p: u64) -> u64 {
    pow_mod(x, p - 2, p)
}

/// The Kauffman bracket of a closed diagram by its state sum, modulo `P`.
///
/// With `A = s` and `α = −A³` the Kauffman relation specializes to the
/// bracket's, so this is an independent check of the engine.
pub fn bracket_mod(d: &Diagram, a: u64) -> u64 {
    let ai = inv_mod(a, P);
    let delta = (P - (a * a % P + ai * ai % P) % P) % P;
    fn go(d: &Diagram, a: u64, ai: u64, delta: u64) -> u64 {
        if d.crossings() == 0 {
            return pow_mod(delta, d.free_loops() as u64, P);
        }
        let (wv, wh) = match d.kinds()[0] {
            CrossKind::Pos => (a, ai),
            CrossKind::Neg => (ai, a),
        };
        let v = go(&d.smoothed(0, Smoothing::Vertical), a, ai, delta);
        let h = go(&d.smoothed(0, Smoothing::Horizontal), a, ai, delta);
        ((wv as u128 * v as u128 + wh as u128 * h as u128) % P as u128) as u64
    }
    go(d, a, ai, delta)
}

/// `(α, s)` at which the Kauffman polynomial equals the bracket with `A = s`.
pub fn bracket_point(a: u64) -> (u64, u64) {
    (P - pow_mod(a, 3, P), a)
}

/// A random braid-and-hook word on `n` strands with `len` slices.
pub fn random_word(r: &mut StdRng, n: usize, len: usize, hooks: bool) -> SliceWord {
    let mut slices = Vec::with_capacity(len);
    for _ in 0..len {
        let i = r.gen_range(0..n - 1);
        let k = r.gen_range(0..if hooks { 3 } else { 2 });
        slices.push(match k {
            0 => Slice::Pos(i),
            1 => Slice::Neg(i),
            _ => Slice::Hook(i),
        });
    }
    SliceWord::new(n, slices).unwrap()
}

pub fn concat(parts: &[&SliceWord]) -> SliceWord {
    let mut w = parts[0].clone();
    for p in &parts[1..] {
        w = w.compose(p).unwrap();
    }
    w
}

pub fn slices(n: usize, s: Vec<Slice>) -> SliceWord {
    SliceWord::new(n, s).unwrap()
}

use skein::bmw::{generator, project_pi, Algebra};
use skein::eval::{Matching, TangleVector};

/// Incremental row echelon form over `𝔽_P`.
#[derive(Default)]
pub struct SpanFp {
    rows: Vec<(usize, Vec<u64>)>,
}

impl SpanFp {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v`; true if the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        for (c, r) in &self.rows {
            let f = v[*c] as u128;
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(r) {
                    *x = ((*x as u128 + P as u128 - f * y as u128 % P as u128) % P as u128) as u64;
                }
            }
        }
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[c], P);
        for x in v.iter_mut() {
            *x = (*x as u128 * inv as u128 % P as u128) as u64;
        }
        self.rows.push((c, v));
        true
    }
}

/// The point `α = 7, s = 11` avoids every pole met in these tests.
pub fn dense_fp(v: &TangleVector, basis: &[Matching]) -> Vec<u64> {
    basis.iter().map(|m| v.get(m).eval_mod(7, 11, P).expect("no pole")).collect()
}

/// Rank of the span of all products of generators (left-multiplying from
/// `1_n`), and of its image under π.
pub fn closure_ranks(alg: &Algebra, n: usize) -> (usize, usize) {
    let basis = Matching::all(n, n);
    let gens: Vec<TangleVector> = (0..n.saturating_sub(1))
        .flat_map(|i| [generator(alg, n, Slice::Pos(i)), generator(alg, n, Slice::Hook(i))])
        .collect();
    let mut span = SpanFp::default();
    let mut pi = SpanFp::default();
    let one = TangleVector::identity(n);
    span.insert(dense_fp(&one, &basis));
    pi.insert(dense_fp(&project_pi(&one), &basis));
    let mut frontier = vec![one];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for g in &gens {
                let w = alg.mul(g, v).unwrap();
                pi.insert(dense_fp(&project_pi(&w), &basis));
                if span.insert(dense_fp(&w, &basis)) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    (span.rank(), pi.rank())
}

/// A random combination `Σ k·w_k` of up to three short words, as pairs.
pub fn random_combination(r: &mut StdRng, n: usize) -> Vec<(i64, SliceWord)> {
    (1..=3)
        .map(|k| {
            let len = r.gen_range(0..=4);
            (k, random_word(r, n, len, true))
        })
        .collect()
}

pub fn combine(alg: &Algebra, terms: &[(i64, SliceWord)]) -> TangleVector {
    let n = terms[0].1.top();
    let mut x = TangleVector::zero(n, n);
    for (k, w) in terms {
        x = x.add(&alg.reduce(w).scale(&skein::coeff::RatFn::from_int(*k)));
    }
    x
}
