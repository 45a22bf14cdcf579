use super::algebra::{generator, project_pi, Algebra};
use super::BmwError;
use crate::coeff::RatFn;
use crate::eval::{Matching, TangleVector};
use crate::linalg::{self, Span};
use crate::tangle::Slice;

/// Coordinates of `v` along `basis`, as a dense vector.
fn dense(v: &TangleVector, basis: &[Matching]) -> Vec<RatFn> {
    basis.iter().map(|m| v.get(m)).collect()
}

/// Assembles and solves `Σ_u c_u · lhs_u = rhs` coordinatewise, dropping
/// identically zero equations. Returns the coefficients and the nullity.
fn solve_combination(
    lhs: &[Vec<TangleVector>],
    rhs: &[TangleVector],
) -> Result<(Vec<RatFn>, usize), BmwError> {
    let mut rows = Vec::new();
    let mut b = Vec::new();
    for (k, target) in rhs.iter().enumerate() {
        let basis = Matching::all(target.top(), target.bottom());
        let cols: Vec<Vec<RatFn>> = lhs.iter().map(|l| dense(&l[k], &basis)).collect();
        let t = dense(target, &basis);
        for (w, tw) in t.iter().enumerate() {
            let row: Vec<RatFn> = cols.iter().map(|c| c[w].clone()).collect();
            if row.iter().all(RatFn::is_zero) && tw.is_zero() {
                continue;
            }
            rows.push(row);
            b.push(tw.clone());
        }
    }
    if lhs.is_empty() {
        return if b.iter().all(RatFn::is_zero) {
            Ok((Vec::new(), 0))
        } else {
            Err(BmwError::Singular)
        };
    }
    linalg::solve(&rows, &b).map_err(|_| BmwError::Singular)
}

/// The unit `E` of the ideal `I_n` spanned by the non-permutation lifts:
/// the unique element of `I_n` with `E h_{n−1} = h_{n−1}` commuting with
/// every `e_i`. `1 − E` projects `K_n` onto its Hecke summand.
///
/// Returns `E` and the nullity of the system (0 means unique).
pub fn ideal_unit(alg: &Algebra, n: usize) -> Result<(TangleVector, usize), BmwError> {
    if n < 2 {
        return Ok((TangleVector::zero(n, n), 0));
    }
    let unknowns: Vec<Matching> = Matching::all(n, n)
        .into_iter()
        .filter(|m| !m.is_permutation())
        .collect();
    let hook = generator(alg, n, Slice::Hook(n - 2));
    let gens: Vec<TangleVector> = (0..n - 1).map(|i| generator(alg, n, Slice::Pos(i))).collect();
    let mut lhs = Vec::with_capacity(unknowns.len());
    for u in &unknowns {
        let x = TangleVector::basis(u.clone());
        let mut eqs = vec![alg.mul(&x, &hook)?];
        for g in &gens {
            eqs.push(alg.mul(&x, g)?.sub(&alg.mul(g, &x)?));
        }
        lhs.push(eqs);
    }
    let mut rhs = vec![hook.clone()];
    rhs.extend(gens.iter().map(|_| TangleVector::zero(n, n)));
    let (c, nullity) = solve_combination(&lhs, &rhs)?;
    let mut e = TangleVector::zero(n, n);
    for (u, cu) in unknowns.into_iter().zip(c) {
        e.add_term(u, cu);
    }
    Ok((e, nullity))
}

/// `s_n(y)`: the element of `K_n` projecting to `y` under `π` and killed by
/// the ideal on both sides, computed as `(1 − E) · y`.
pub fn section_of(alg: &Algebra, unit: &TangleVector, y: &TangleVector) -> TangleVector {
    let lift = project_pi(y);
    lift.sub(&alg.mul(unit, &lift).expect("square"))
}

/// Generators `(a ⊗ 1₁) h_{n−1} (b ⊗ 1₁)` of `I_n`, with `a, b` canonical
/// lifts in `K_{n−1}`, keeping only those that enlarge the span.
pub fn ideal_generators(alg: &Algebra, n: usize) -> Vec<TangleVector> {
    if n < 2 {
        return Vec::new();
    }
    let hook = generator(alg, n, Slice::Hook(n - 2));
    let id1 = TangleVector::identity(1);
    let small: Vec<TangleVector> = Matching::all(n - 1, n - 1)
        .into_iter()
        .map(|m| alg.tensor(&TangleVector::basis(m), &id1))
        .collect();
    let basis = Matching::all(n, n);
    let mut span = Span::new();
    let mut out = Vec::new();
    for a in &small {
        let ah = alg.mul(a, &hook).expect("square");
        for b in &small {
            let g = alg.mul(&ah, b).expect("square");
            if span.insert(&dense(&g, &basis)) {
                out.push(g);
            }
        }
    }
    out
}

/// The defining characterization solved directly: `x = lift(y) + i` with
/// `i ∈ I_n` and `x g = g x = 0` for all ideal generators `g`.
pub fn section_by_annihilation(
    alg: &Algebra,
    y: &TangleVector,
    gens: &[TangleVector],
) -> Result<(TangleVector, usize), BmwError> {
    let n = y.top();
    let lift = project_pi(y);
    let unknowns: Vec<Matching> = Matching::all(n, n)
        .into_iter()
        .filter(|m| !m.is_permutation())
        .collect();
    let mut lhs = Vec::with_capacity(unknowns.len());
    for u in &unknowns {
        let x = TangleVector::basis(u.clone());
        let mut eqs = Vec::new();
        for g in gens {
            eqs.push(alg.mul(&x, g)?);
            eqs.push(alg.mul(g, &x)?);
        }
        lhs.push(eqs);
    }
    let mut rhs = Vec::new();
    for g in gens {
        rhs.push(alg.mul(&lift, g)?.neg());
        rhs.push(alg.mul(g, &lift)?.neg());
    }
    let (c, nullity) = solve_combination(&lhs, &rhs)?;
    let mut x = lift;
    for (u, cu) in unknowns.into_iter().zip(c) {
        x.add_term(u, cu);
    }
    Ok((x, nullity))
}
