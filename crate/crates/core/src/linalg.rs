//! Exact dense linear algebra over `ℚ(α, s)`, plus modular rank bounds.

use thiserror::Error;

use crate::coeff::RatFn;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("matrix is singular")]
    Singular,
}

fn weight(x: &RatFn) -> usize {
    x.size()
}

/// Row-reduces `m` in place to reduced echelon form; returns pivot columns.
///
/// Only the first `ncols` columns are used for pivots, so an augmented
/// right-hand side can ride along.
pub fn rref(m: &mut [Vec<RatFn>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        // the lightest nonzero entry keeps expression swell down
        let Some(p) = (r..m.len())
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| weight(&m[i][c]))
        else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact rank of the matrix with the given rows.
pub fn rank(rows: &[Vec<RatFn>]) -> usize {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Solves `a · x = b` (rows of `a` are equations). Returns a particular
/// solution with free variables set to zero, and the nullity.
pub fn solve(a: &[Vec<RatFn>], b: &[RatFn]) -> Result<(Vec<RatFn>, usize), LinalgError> {
    assert_eq!(a.len(), b.len());
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<RatFn>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, ncols);
    if m[pivots.len()..].iter().any(|row| !row[ncols].is_zero()) {
        return Err(LinalgError::Inconsistent);
    }
    let mut x = vec![RatFn::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Ok((x, ncols - pivots.len()))
}

/// Coefficients `c` with `Σ c_i · vectors[i] = target`, if any.
pub fn solve_in_span(
    vectors: &[Vec<RatFn>],
    target: &[RatFn],
) -> Result<(Vec<RatFn>, usize), LinalgError> {
    let dim = target.len();
    let a: Vec<Vec<RatFn>> = (0..dim)
        .map(|k| vectors.iter().map(|v| v[k].clone()).collect())
        .collect();
    solve(&a, target)
}

/// Inverse of a square matrix.
pub fn inverse(a: &[Vec<RatFn>]) -> Result<Vec<Vec<RatFn>>, LinalgError> {
    let n = a.len();
    let mut m: Vec<Vec<RatFn>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { RatFn::one() } else { RatFn::zero() }));
            r
        })
        .collect();
    if rref(&mut m, n).len() < n {
        return Err(LinalgError::Singular);
    }
    Ok(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Echelon basis of a growing span, for rank tracking and membership.
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: Vec<(usize, Vec<RatFn>)>,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `v` minus its projection along the pivots of the span.
    pub fn reduce(&self, v: &[RatFn]) -> Vec<RatFn> {
        let mut v = v.to_vec();
        for (c, row) in &self.rows {
            if v[*c].is_zero() {
                continue;
            }
            let f = v[*c].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[RatFn]) -> bool {
        self.reduce(v).iter().all(RatFn::is_zero)
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &[RatFn]) -> bool {
        let mut r = self.reduce(v);
        let Some(c) = r
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .min_by_key(|(_, x)| weight(x))
            .map(|(c, _)| c)
        else {
            return false;
        };
        let inv = r[c].inv().expect("nonzero");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        self.rows.push((c, r));
        true
    }
}

/// Rank over `𝔽_p` after substituting `α = a`, `s = b`; a lower bound for
/// the rank over `ℚ(α, s)`. `None` if some entry has a pole there.
pub fn rank_mod(rows: &[Vec<RatFn>], a: u64, b: u64, p: u64) -> Option<usize> {
    let mut m: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
    for row in rows {
        let mut r = Vec::with_capacity(row.len());
        for x in row {
            r.push(x.eval_mod(a, b, p)?);
        }
        m.push(r);
    }
    Some(rank_fp(&mut m, p))
}

/// Rank of a matrix over `𝔽_p`.
pub fn rank_fp(m: &mut [Vec<u64>], p: u64) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = crate::coeff::mod_inv(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        let pr = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c] as u128;
            for (x, &y) in row.iter_mut().zip(&pr) {
                let sub = f * y as u128 % p as u128;
                *x = ((*x as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: i64) -> RatFn {
        RatFn::from_int(c)
    }

    #[test]
    fn solve_and_invert() {
        let a = vec![vec![RatFn::alpha(), q(1)], vec![q(1), RatFn::s()]];
        let b = vec![q(1), q(0)];
        let (x, null) = solve(&a, &b).unwrap();
        assert_eq!(null, 0);
        for (row, rhs) in a.iter().zip(&b) {
            let lhs = row[0].mul(&x[0]).add(&row[1].mul(&x[1]));
            assert_eq!(&lhs, rhs);
        }
        let inv = inverse(&a).unwrap();
        let prod00 = a[0][0].mul(&inv[0][0]).add(&a[0][1].mul(&inv[1][0]));
        assert!(prod00.is_one());
        let sing = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(inverse(&sing), Err(LinalgError::Singular));
        assert_eq!(solve(&sing, &[q(1), q(3)]), Err(LinalgError::Inconsistent));
        assert_eq!(solve(&sing, &[q(1), q(2)]).unwrap().1, 1);
    }

    #[test]
    fn ranks_agree() {
        let d = crate::coeff::loop_value();
        let rows = vec![
            vec![d.clone(), q(1), q(0)],
            vec![q(1), d.clone(), q(1)],
            vec![d.add(&q(1)), d.add(&q(1)), q(1)],
        ];
        assert_eq!(rank(&rows), 2);
        assert!(rank_mod(&rows, 3, 5, 1_000_000_007).unwrap() <= 2);
        let mut sp = Span::new();
        for r in &rows {
            sp.insert(r);
        }
        assert_eq!(sp.rank(), 2);
        assert!(sp.contains(&rows[2]));
        assert!(!sp.contains(&[q(0), q(0), q(1)]));
    }

    #[test]
    fn eval_mod_matches_arithmetic() {
        let p = 1_000_000_007;
        let x = RatFn::alpha().sub(&RatFn::s_pow(-2)).div(&crate::coeff::loop_value()).unwrap();
        let y = RatFn::z().mul(&RatFn::alpha_pow(-3));
        let (a, b) = (12345u64, 678u64);
        let xv = x.eval_mod(a, b, p).unwrap() as u128;
        let yv = y.eval_mod(a, b, p).unwrap() as u128;
        let sum = x.add(&y).eval_mod(a, b, p).unwrap() as u128;
        let prod = x.mul(&y).eval_mod(a, b, p).unwrap() as u128;
        assert_eq!(sum, (xv + yv) % p as u128);
        assert_eq!(prod, xv * yv % p as u128);
        assert_eq!(RatFn::s_pow(2).sub(&q(1)).inv().unwrap().eval_mod(a, 1, p), None);
    }
}
