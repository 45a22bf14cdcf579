use super::*;
use crate::coeff::{loop_value, RatFn};
use crate::tangle::{e, h, Slice};

fn w(text: &str, n: usize) -> SliceWord {
    SliceWord::parse(text, n).unwrap()
}

fn a(k: i32) -> RatFn {
    RatFn::alpha_pow(k)
}

#[test]
fn basic_values() {
    let d = loop_value();
    assert!(kauffman_closure(&SliceWord::identity(0)).is_one());
    assert_eq!(kauffman_closure(&SliceWord::identity(1)), d);
    assert_eq!(kauffman_closure(&w("s1", 2)), a(1).mul(&d));
    assert_eq!(kauffman_closure(&w("s1^-1", 2)), a(-1).mul(&d));
    assert_eq!(kauffman_closure(&w("h1", 2)), d);
    assert_eq!(kauffman_closure(&SliceWord::identity(3)), d.pow(3).unwrap());
}

#[test]
fn trefoil_against_relation_algebra() {
    // e³ = e + z + z²e − z²α⁻¹h − zα⁻²h, traced with tr(1)=δ², tr(e)=αδ, tr(h)=δ
    let d = loop_value();
    let z = RatFn::z();
    let z2 = z.mul(&z);
    let expect = a(1)
        .mul(&d)
        .add(&z.mul(&d).mul(&d))
        .add(&z2.mul(&a(1)).mul(&d))
        .sub(&z2.mul(&a(-1)).mul(&d))
        .sub(&z.mul(&a(-2)).mul(&d));
    assert_eq!(kauffman_closure(&w("s1 s1 s1", 2)), expect);
}

#[test]
fn small_reductions() {
    let id = TangleVector::basis(Matching::identity(2));
    let cross = reduce_tangle(&e(2, 1));
    assert_eq!(cross.len(), 1);
    let (m, c) = cross.iter().next().unwrap();
    assert!(c.is_one());
    assert_eq!(m.as_permutation(), Some(vec![1, 0]));
    let hook = reduce_tangle(&h(2, 1));
    assert_eq!(hook.len(), 1);
    let z = RatFn::z();
    let expect = cross.sub(&id.scale(&z)).add(&hook.scale(&z));
    assert_eq!(reduce_tangle(&w("s1^-1", 2)), expect);
    assert_eq!(reduce_tangle(&w("h1 s1", 2)), hook.scale(&a(-1)));
    assert_eq!(reduce_tangle(&w("s1 h1", 2)), hook.scale(&a(-1)));
    assert_eq!(reduce_tangle(&w("h1 h1", 2)), hook.scale(&loop_value()));
    assert_eq!(reduce_tangle(&w("s1 s1^-1", 2)), id);
}

#[test]
fn basis_sizes_and_limit() {
    let sizes: Vec<usize> = (1..=4).map(|n| brauer_basis(n, 4).unwrap().len()).collect();
    assert_eq!(sizes, vec![1, 3, 15, 105]);
    assert_eq!(
        brauer_basis(5, 4),
        Err(EvalError::TooLarge { n: 5, max: 4 })
    );
    assert_eq!(Matching::all(3, 1).len(), 3);
    assert!(Matching::all(2, 1).is_empty());
}

#[test]
fn canonical_lifts_are_fixed_points() {
    for (m, k) in [(1, 1), (2, 2), (3, 3), (4, 4), (2, 0), (0, 4), (3, 1), (1, 3), (4, 2)] {
        for mt in Matching::all(m, k) {
            let lift = mt.canonical_lift();
            assert_eq!((lift.top(), lift.bottom()), (m, k));
            let v = reduce_tangle(&lift);
            assert_eq!(v, TangleVector::basis(mt.clone()), "{mt}");
        }
    }
}

#[test]
fn strategies_and_memo_agree() {
    let words = ["s1 s2^-1 s1 h2 s1", "s2 s1 s2^-1 s1^-1 s2 s1", "h1 s2 s2 s1^-1 h2 s1 s1"];
    let engines = [
        Engine::new(Strategy::FirstViolation, true),
        Engine::new(Strategy::FirstViolation, false),
        Engine::new(Strategy::LastViolation, true),
        Engine::new(Strategy::LastViolation, false),
    ];
    for t in words {
        let x = w(t, 3);
        let vals: Vec<_> = engines.iter().map(|g| reduce_with(g, &x)).collect();
        assert!(vals.windows(2).all(|p| p[0] == p[1]), "{t}");
    }
}

#[test]
fn kauffman_rejects_annulus() {
    let d = closure(&SliceWord::identity(1), Ambient::Annulus).unwrap();
    assert_eq!(kauffman(&d), Err(EvalError::NotPlanar));
    let d = closure(&SliceWord::identity(1), Ambient::Plane).unwrap();
    assert_eq!(kauffman(&d).unwrap(), loop_value());
    let _ = Slice::Id;
}

#[test]
fn hook_relations() {
    let h2 = reduce_tangle(&h(3, 2));
    let h1 = reduce_tangle(&h(3, 1));
    assert_eq!(reduce_tangle(&w("h2 s1 h2", 3)), h2.scale(&a(1)));
    assert_eq!(reduce_tangle(&w("h2 s1^-1 h2", 3)), h2.scale(&a(-1)));
    assert_eq!(reduce_tangle(&w("h1 s2 h1", 3)), h1.scale(&a(1)));
    assert_eq!(reduce_tangle(&w("h1 s2^-1 h1", 3)), h1.scale(&a(-1)));
    assert_eq!(reduce_tangle(&w("h1 h2 h1", 3)), h1);
    assert_eq!(
        reduce_tangle(&w("s1 s2 s1", 3)),
        reduce_tangle(&w("s2 s1 s2", 3))
    );
}
