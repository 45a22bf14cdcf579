use super::*;
use crate::tangle::{wrap_braid, Slice, SliceWord};
use crate::young::Cell;

fn store() -> IdempotentStore {
    IdempotentStore::new(4, None)
}

#[test]
fn hat_small() {
    let st = store();
    let alg = st.algebra();
    let one = hat(&st, &TangleVector::identity(1)).unwrap();
    assert_eq!(one, TorusElement::basis(YoungDiagram::from_rows(&[1])));
    let h = alg.reduce(&SliceWord::parse("h1", 2).unwrap());
    assert_eq!(hat(&st, &h).unwrap(), TorusElement::term(YoungDiagram::empty(), RatFn::loop_value()));
}

#[test]
fn hat_agrees_with_solve_and_traces() {
    let st = store();
    let alg = st.algebra();
    for n in 1..=3 {
        for m in Matching::all(n, n) {
            let x = TangleVector::basis(m);
            let h = hat(&st, &x).unwrap();
            assert_eq!(h, hat_by_solve(&st, &x).unwrap());
            assert_eq!(h.markov(&st).unwrap(), alg.trace(&x));
            for (l, _) in h.iter() {
                assert!(l.size() <= n && (n - l.size()) % 2 == 0);
            }
        }
    }
    let x = alg.reduce(&SliceWord::parse("s1 h2 s1^-1", 3).unwrap());
    let y = alg.reduce(&SliceWord::parse("s2 s1 s2", 3).unwrap());
    let xy = alg.mul(&x, &y).unwrap();
    let yx = alg.mul(&y, &x).unwrap();
    assert_eq!(hat(&st, &xy).unwrap(), hat(&st, &yx).unwrap());
}

#[test]
fn cappings_small() {
    let st = store();
    let alg = st.algebra();
    for (l, c) in [
        (YoungDiagram::from_rows(&[1]), Cell::new(1, 1)),
        (YoungDiagram::from_rows(&[2]), Cell::new(1, 2)),
        (YoungDiagram::from_rows(&[1, 1]), Cell::new(2, 1)),
    ] {
        let mu = l.remove_cell(c).unwrap();
        let cn = c.content();
        let q1 = rel_generator(&st, &l, c, RelKind::Prime).unwrap();
        let expected = st.qdim(&mu).unwrap().div(&st.qdim(&l).unwrap()).unwrap();
        let p1 = cap_element(&st, &q1.element, Capping::Prime).unwrap();
        let p2 = cap_element(&st, &q1.element, Capping::DoublePrime).unwrap();
        assert_eq!(p1, TorusElement::term(mu.clone(), expected.clone()));
        assert_eq!(p2, TorusElement::term(mu.clone(), expected.mul(&RatFn::s_pow(2 * cn))));

        // relation (II), for both hook placements and both wrap positions
        let p = relative::projection(&st, &l, c).unwrap();
        let n = l.size();
        let hook = alg.reduce(&SliceWord::single(n + 1, Slice::Hook(n - 1)).unwrap());
        let pt = alg.tensor(&p, &TangleVector::identity(1));
        let w = alg.reduce(&wrap_braid(n + 1));
        let law = RatFn::alpha_pow(-2).mul(&RatFn::s_pow(-2 * cn));
        for z in [alg.mul(&hook, &pt).unwrap(), alg.mul(&pt, &hook).unwrap()] {
            let base = hat(&st, &alg.partial_trace(&z)).unwrap();
            for wz in [alg.mul(&z, &w).unwrap(), alg.mul(&w, &z).unwrap()] {
                let slid = hat(&st, &alg.partial_trace(&wz)).unwrap();
                assert_eq!(slid, base.scale(&law), "{l} {c}");
            }
        }
    }
}

#[test]
fn report_to_two() {
    let st = store();
    let rep = s1s2_report(&st, 2, None).unwrap();
    assert_eq!(rep.surviving, vec![YoungDiagram::empty()]);
    assert!(rep.verified);
    assert_eq!(
        rep.convention,
        Some(Convention {
            epsilon: 1,
            epsilon_prime: 1,
            tau: -1
        })
    );
    let r = &rep.rows[0];
    assert_eq!(r.scalar_i, Some(RatFn::zero()));
    assert!(rep.table().contains("verified to |λ| ≤ 1"));
}

#[test]
fn convention_persists() {
    let st = store();
    let dir = tempfile::tempdir().unwrap();
    let rep = s1s2_report(&st, 1, Some(dir.path())).unwrap();
    let c = rep.convention.unwrap();
    let bad = Convention { epsilon: -c.epsilon, ..c };
    std::fs::write(dir.path().join("convention.json"), serde_json::to_vec(&bad).unwrap()).unwrap();
    assert!(matches!(s1s2_report(&st, 1, Some(dir.path())), Err(TorusError::Convention(_))));
}
