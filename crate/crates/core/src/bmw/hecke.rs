use super::algebra::{project_pi, Algebra};
use super::BmwError;
use crate::coeff::RatFn;
use crate::eval::{Matching, TangleVector};
use crate::young::YoungDiagram;

/// All permutations of the Young subgroup with the given block sizes,
/// as `perm[i]` = image of `i`.
fn young_subgroup(blocks: &[usize]) -> Vec<Vec<usize>> {
    let n: usize = blocks.iter().sum();
    let mut out = vec![(0..n).collect::<Vec<_>>()];
    let mut start = 0;
    for &b in blocks {
        let mut next = Vec::new();
        for p in &out {
            for q in permutations(b) {
                let mut r = p.clone();
                for (i, &j) in q.iter().enumerate() {
                    r[start + i] = start + j;
                }
                next.push(r);
            }
        }
        out = next;
        start += b;
    }
    out
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q: Vec<usize> = p.iter().map(|&x| if x >= k { x + 1 } else { x }).collect();
            q.push(k);
            out.push(q);
        }
    }
    out.sort();
    out
}

pub(crate) fn length(perm: &[usize]) -> i32 {
    let mut l = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                l += 1;
            }
        }
    }
    l
}

/// `Σ_w c^{ℓ(w)} T_w` over a Young subgroup, `T_w` the positive lift.
fn weighted_sum(n: usize, blocks: &[usize], weight: &RatFn) -> TangleVector {
    let mut out = TangleVector::zero(n, n);
    for w in young_subgroup(blocks) {
        let c = weight.pow(length(&w)).expect("nonzero weight");
        out.add_term(Matching::from_permutation(&w), c);
    }
    out
}

/// Row-reading position to column-reading position of each cell.
fn row_to_column(lambda: &YoungDiagram) -> Vec<usize> {
    let cells = lambda.cells();
    let mut by_col = cells.clone();
    by_col.sort_by_key(|c| (c.col, c.row));
    cells
        .iter()
        .map(|c| by_col.iter().position(|d| d == c).unwrap())
        .collect()
}

/// The quasi-idempotent `X_λ · T_π · Y_{λ'} · T_π⁻¹` of the Hecke algebra:
/// the row quasi-symmetrizer (weights `s^ℓ`), the permutation braid taking
/// rows to columns, the column quasi-antisymmetrizer (weights `(−s)^{−ℓ}`),
/// and the inverse braid back.
pub fn young_quasi_idempotent(alg: &Algebra, lambda: &YoungDiagram) -> TangleVector {
    let n = lambda.size();
    let rows: Vec<usize> = lambda.rows().iter().map(|&r| r as usize).collect();
    let cols: Vec<usize> = lambda.transpose().rows().iter().map(|&r| r as usize).collect();
    let x = weighted_sum(n, &rows, &RatFn::s());
    let y = weighted_sum(n, &cols, &RatFn::s().neg().inv().unwrap());
    let pi = Matching::from_permutation(&row_to_column(lambda));
    let t = TangleVector::basis(pi.clone());
    let t_inv = project_pi(&alg.reduce(&pi.canonical_lift().inverse()));
    let mut acc = x;
    for f in [&t, &y, &t_inv] {
        acc = project_pi(&alg.mul(&acc, f).expect("square"));
    }
    acc
}

/// The Young idempotent, normalized so that `y² = y` in the Hecke algebra.
pub fn young_idempotent(alg: &Algebra, lambda: &YoungDiagram) -> Result<TangleVector, BmwError> {
    let q = young_quasi_idempotent(alg, lambda);
    let sq = project_pi(&alg.mul(&q, &q)?);
    let (m, c) = q.iter().next().ok_or(BmwError::Normalization)?;
    let kappa = sq.get(m).div(c).map_err(|_| BmwError::Normalization)?;
    if kappa.is_zero() || sq != q.scale(&kappa) {
        return Err(BmwError::Normalization);
    }
    Ok(q.scale(&kappa.inv().unwrap()))
}
