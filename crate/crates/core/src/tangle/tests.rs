use super::*;

fn w(text: &str, n: usize) -> SliceWord {
    SliceWord::parse(text, n).unwrap()
}

#[test]
fn parse_and_display() {
    let x = w("s1 s2^-1 h1", 3);
    assert_eq!(
        x.slices(),
        &[Slice::Pos(0), Slice::Neg(1), Slice::Hook(0)]
    );
    assert_eq!(x.to_string(), "s1 s2^-1 h1");
    assert_eq!(SliceWord::parse_infer("s2").unwrap().strands(), 3);
    assert_eq!(SliceWord::parse_infer("").unwrap().strands(), 1);
}

#[test]
fn parse_rejects_bad_input() {
    assert!(matches!(
        SliceWord::parse("s2", 2),
        Err(TangleError::SliceOutOfRange { .. })
    ));
    for bad in ["s0", "x1", "s", "h1^-1", "s1^2", "s-1"] {
        assert!(SliceWord::parse(bad, 4).is_err(), "{bad}");
    }
}

#[test]
fn compose_and_tensor() {
    let x = w("s1 h1", 2);
    assert_eq!(SliceWord::identity(2).compose(&x).unwrap(), x);
    assert!(x.compose(&SliceWord::identity(3)).is_err());
    let t = SliceWord::identity(2).tensor(&SliceWord::identity(3));
    assert_eq!((t.top(), t.len()), (5, 0));
    assert_eq!(x.tensor(&SliceWord::identity(1)).strands(), 3);
    let hh = w("h1", 2).tensor(&w("h1", 2));
    assert_eq!(hh.slices(), &[Slice::Hook(0), Slice::Hook(2)]);
}

#[test]
fn wrap_braid_words() {
    assert!(wrap_braid(1).is_empty());
    assert_eq!(wrap_braid(2).to_string(), "s1 s1");
    assert_eq!(wrap_braid(3).to_string(), "s2 s1 s1 s2");
}

#[test]
fn closures_count_components() {
    let u = closure(&SliceWord::identity(1), Ambient::Plane).unwrap();
    assert_eq!((u.crossings(), u.components()), (0, 1));
    let k = closure(&w("s1", 2), Ambient::Plane).unwrap();
    assert_eq!((k.crossings(), k.components(), k.writhe()), (1, 1, 1));
    let k = closure(&w("s1^-1", 2), Ambient::Plane).unwrap();
    assert_eq!(k.writhe(), -1);
    let hopf = closure(&w("s1 s1", 2), Ambient::Plane).unwrap();
    assert_eq!((hopf.components(), hopf.writhe()), (2, 0));
    let tref = closure(&w("s1 s1 s1", 2), Ambient::Plane).unwrap();
    assert_eq!((tref.components(), tref.writhe()), (1, 3));
    let hh = closure(&w("h1 h1", 2), Ambient::Plane).unwrap();
    assert_eq!((hh.crossings(), hh.components()), (0, 2));
    assert!(closure(&SliceWord::new(2, vec![Slice::Cup(0)]).unwrap(), Ambient::Plane).is_err());
}

#[test]
fn annulus_windings() {
    let hk = closure(&w("h1", 2), Ambient::Annulus).unwrap();
    assert_eq!(hk.windings, vec![0]);
    let id2 = closure(&SliceWord::identity(2), Ambient::Annulus).unwrap();
    assert_eq!(id2.windings, vec![1, 1]);
    let s = closure(&w("s1", 2), Ambient::Annulus).unwrap();
    assert_eq!(s.windings, vec![2]);
    let x = closure(&w("s1 h2", 3), Ambient::Annulus).unwrap();
    assert_eq!(x.windings, vec![1]);
    let y = closure(&w("h2", 3), Ambient::Annulus).unwrap();
    assert_eq!(y.windings, vec![1, 0]);
}

#[test]
fn cups_and_caps() {
    // ∩ then ∪ on nothing: a free loop.
    let l = SliceWord::new(0, vec![Slice::Cap(0), Slice::Cup(0)]).unwrap();
    let d = Diagram::from_word(&l);
    assert_eq!((d.crossings(), d.free_loops()), (0, 1));
    // A zig-zag is straight.
    let z = SliceWord::new(1, vec![Slice::Cap(1), Slice::Cup(0)]).unwrap();
    assert_eq!(Diagram::from_word(&z), Diagram::from_word(&SliceWord::identity(1)));
    assert_eq!(l.inverse().top(), 0);
}

#[test]
fn smoothing_a_kink() {
    let d = closure(&w("s1", 2), Ambient::Plane).unwrap().diagram;
    let v = d.smoothed(0, Smoothing::Vertical);
    let hz = d.smoothed(0, Smoothing::Horizontal);
    assert_eq!((v.crossings(), v.free_loops()), (0, 2));
    assert_eq!((hz.crossings(), hz.free_loops()), (0, 1));
}
