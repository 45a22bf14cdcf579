use serde::Serialize;

use super::algebra::Algebra;
use crate::coeff::RatFn;
use crate::eval::TangleVector;
use crate::tangle::{Slice, SliceWord};

/// One instance of a defining relation of `K_n`, checked exactly.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: &'static str,
    pub instance: String,
    pub holds: bool,
}

fn word(alg: &Algebra, n: usize, slices: Vec<Slice>) -> TangleVector {
    alg.reduce(&SliceWord::new(n, slices).expect("slices fit"))
}

/// (B₁), (B₂), (R₁), (R₂) and (K) on `n` strands, every index.
pub fn check_relations(alg: &Algebra, n: usize) -> Vec<RelationCheck> {
    use Slice::{Hook, Neg, Pos};
    let mut out = Vec::new();
    let mut push = |name, instance: String, lhs: TangleVector, rhs: TangleVector| {
        out.push(RelationCheck {
            name,
            instance,
            holds: lhs == rhs,
        })
    };
    let alpha = RatFn::alpha();
    let alpha_inv = alpha.inv().expect("unit");
    for i in 0..n.saturating_sub(1) {
        let k = i + 1;
        if i + 2 < n {
            push(
                "B1",
                format!("e{k} e{} e{k} = e{} e{k} e{}", k + 1, k + 1, k + 1),
                word(alg, n, vec![Pos(i), Pos(i + 1), Pos(i)]),
                word(alg, n, vec![Pos(i + 1), Pos(i), Pos(i + 1)]),
            );
        }
        for j in i + 2..n - 1 {
            push(
                "B2",
                format!("e{k} e{} = e{} e{k}", j + 1, j + 1),
                word(alg, n, vec![Pos(i), Pos(j)]),
                word(alg, n, vec![Pos(j), Pos(i)]),
            );
        }
        let h = word(alg, n, vec![Hook(i)]);
        push(
            "R1",
            format!("h{k} e{k} = α⁻¹ h{k}"),
            word(alg, n, vec![Hook(i), Pos(i)]),
            h.scale(&alpha_inv),
        );
        push(
            "R1",
            format!("e{k} h{k} = α⁻¹ h{k}"),
            word(alg, n, vec![Pos(i), Hook(i)]),
            h.scale(&alpha_inv),
        );
        let neighbours = [i.checked_sub(1), (i + 2 < n).then_some(i + 1)];
        for j in neighbours.into_iter().flatten() {
            for (x, sign, c) in [(Pos(j), "", &alpha), (Neg(j), "⁻¹", &alpha_inv)] {
                push(
                    "R2",
                    format!("h{k} e{}{sign} h{k} = α{} h{k}", j + 1, if sign.is_empty() { "" } else { "⁻¹" }),
                    word(alg, n, vec![Hook(i), x, Hook(i)]),
                    h.scale(c),
                );
            }
        }
        let lhs = word(alg, n, vec![Pos(i)]).sub(&word(alg, n, vec![Neg(i)]));
        let rhs = TangleVector::identity(n).sub(&h).scale(&RatFn::z());
        push("K", format!("e{k} − e{k}⁻¹ = z(1 − h{k})"), lhs, rhs);
    }
    out
}
