//! Acceptance suite: one line per criterion, exact equality throughout.
//!
//! Runs as a plain binary (`harness = false`). The n = 4 idempotent parts
//! are nightly: set `SKEIN_NIGHTLY=1` or pass `--ignored`/`--include-ignored`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use skein::bmw::{
    check_relations, default_algebra, ideal_generators, project_pi, section_by_annihilation, section_of,
    young_idempotent, IdempotentStore,
};
use skein::coeff::RatFn;
use skein::eval::{brauer_basis, kauffman_closure, kauffman_diagram, reduce_tangle, reduce_with, Engine, Matching, Strategy};
use skein::eval::TangleVector;
use skein::linalg;
use skein::tangle::{closure, Ambient, Diagram, Slice, SliceWord};
use skein::torus::{hat, meridian, s1s2_report, TorusElement};
use skein::young::{enumerate_updown, YoungDiagram};

enum Verdict {
    Pass(String),
    /// A clause that does not hold, with every other clause checked.
    Fail(String),
}

type Check = Result<Verdict, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let e = t.elapsed();
    ensure(e <= limit, || format!("{what} took {e:?} > {limit:?}"))
}

fn nightly() -> bool {
    std::env::var_os("SKEIN_NIGHTLY").is_some_and(|v| v != "0")
        || std::env::args().any(|a| a == "--ignored" || a == "--include-ignored")
}

fn nightly_note(done: bool) -> &'static str {
    if done {
        "; n = 4 nightly part run"
    } else {
        "; n = 4 nightly part skipped"
    }
}

fn c1_relations() -> Check {
    let alg = default_algebra();
    let t = Instant::now();
    let mut count = 0;
    for n in 2..=4 {
        for c in check_relations(alg, n) {
            ensure(c.holds, || format!("n = {n}: {} {}", c.name, c.instance))?;
            count += 1;
        }
        if n == 3 {
            within(t, Duration::from_secs(60), "n ≤ 3")?;
        }
    }
    within(t, Duration::from_secs(600), "n = 4")?;
    Ok(Verdict::Pass(format!("{count} instances for n = 2, 3, 4 in {:.1?}", t.elapsed())))
}

fn c2_dimensions() -> Check {
    let alg = default_algebra();
    let mut parts = Vec::new();
    for (n, dim, fact) in [(1usize, 1usize, 1usize), (2, 3, 2), (3, 15, 6), (4, 105, 24)] {
        let b = brauer_basis(n, 4).map_err(|e| e.to_string())?;
        ensure(b.len() == dim, || format!("brauer_basis({n}) has {}", b.len()))?;
        let (closure, image) = closure_ranks(alg, n);
        ensure(closure == dim, || format!("closure rank {closure} at n = {n}"))?;
        ensure(image == fact, || format!("dim π image {image} at n = {n}"))?;
        let mut by_shape = std::collections::BTreeMap::<YoungDiagram, usize>::new();
        for t in enumerate_updown(n, None) {
            *by_shape.entry(t.shape().clone()).or_default() += 1;
        }
        let pairs: usize = by_shape.values().map(|c| c * c).sum();
        ensure(pairs == dim, || format!("{pairs} tableau pairs at n = {n}"))?;
        parts.push(format!("{dim}/{fact}"));
    }
    Ok(Verdict::Pass(format!("dim/π-image {}", parts.join(", "))))
}

/// Existence, uniqueness, idempotence, `π(ỹ) = y*` and two-sided
/// annihilation for every `λ ⊢ n`.
fn check_sections(st: &IdempotentStore, n: usize, solve: bool) -> Result<(), String> {
    let alg = st.algebra();
    let gens = ideal_generators(alg, n);
    // uniqueness: two solutions differ by i ∈ I_n with i·I_n = 0; the unit
    // E ∈ I_n, acting as 1 on I_n, forces i = E·i = 0
    let e = st.ideal_unit(n).map_err(|e| e.to_string())?;
    ensure(project_pi(&e).is_zero(), || format!("E_{n} not in the ideal"))?;
    for g in &gens {
        let (eg, ge) = (alg.mul(&e, g).unwrap(), alg.mul(g, &e).unwrap());
        ensure(&eg == g && &ge == g, || format!("E_{n} is not a unit of I_{n}"))?;
    }
    for l in YoungDiagram::all_of_size(n) {
        let s = st.section(&l).map_err(|e| e.to_string())?;
        let y = &s.idempotent;
        ensure(&alg.mul(y, y).unwrap() == y, || format!("ỹ{l} not idempotent"))?;
        let star = young_idempotent(alg, &l).map_err(|e| e.to_string())?;
        ensure(project_pi(y) == star, || format!("π(ỹ{l}) ≠ y{l}*"))?;
        for g in &gens {
            ensure(alg.mul(y, g).unwrap().is_zero() && alg.mul(g, y).unwrap().is_zero(), || {
                format!("ỹ{l} does not annihilate the ideal")
            })?;
        }
        if solve {
            let (x, nullity) = section_by_annihilation(alg, &star, &gens).map_err(|e| e.to_string())?;
            ensure(nullity == 0 && &x == y, || format!("annihilation solve for {l} disagrees"))?;
        }
    }
    Ok(())
}

fn c3_sections() -> Check {
    let full = nightly();
    let st = IdempotentStore::new(4, None);
    let alg = st.algebra();
    for n in 1..=3 {
        check_sections(&st, n, true)?;
    }
    if full {
        check_sections(&st, 4, false)?;
    }
    let unit = st.ideal_unit(3).map_err(|e| e.to_string())?;
    let gens = ideal_generators(alg, 3);
    let mut r = rng(301);
    for _ in 0..10 {
        let x = combine(alg, &random_combination(&mut r, 3));
        let h = section_of(alg, &unit, &project_pi(&x));
        let i = x.sub(&h);
        ensure(project_pi(&i).is_zero(), || "I-part has a permutation term".into())?;
        for g in &gens {
            ensure(alg.mul(&h, g).unwrap().is_zero() && alg.mul(g, &h).unwrap().is_zero(), || {
                "H-part not killed by the ideal".into()
            })?;
        }
        ensure(h.add(&i) == x, || "H ⊕ I parts do not add up".into())?;
    }
    Ok(Verdict::Pass(format!(
        "|λ| ≤ {}; 10 random H ⊕ I splittings of K₃ exact{}",
        if full { 4 } else { 3 },
        nightly_note(full)
    )))
}

fn c4_orthogonality() -> Check {
    let st = IdempotentStore::new(3, None);
    let alg = st.algebra();
    let mut count = 0;
    for n in 1..=3 {
        let tabs = enumerate_updown(n, None);
        let pairs: Vec<_> = tabs.iter().map(|t| st.tab_morphisms(t).unwrap()).collect();
        for (i, l) in tabs.iter().enumerate() {
            let y = &st.section(l.shape()).unwrap().idempotent;
            for (j, g) in tabs.iter().enumerate() {
                let ba = alg.mul(&pairs[j].b, &pairs[i].a).unwrap();
                let ok = if i == j { &ba == y } else { ba.is_zero() };
                ensure(ok, || format!("b{g:?} a{l:?}"))?;
                count += 1;
            }
        }
    }
    Ok(Verdict::Pass(format!("{count} identities (225 at n = 3)")))
}

fn c5_engine() -> Check {
    let delta = RatFn::loop_value();
    ensure(kauffman_closure(&SliceWord::identity(1)) == delta, || "unknot".into())?;
    let kink = kauffman_closure(&SliceWord::parse("s1", 2).unwrap());
    ensure(kink == RatFn::alpha().mul(&delta), || "positive kink".into())?;
    let mut r = rng(501);
    let eng = Engine::new(Strategy::FirstViolation, true);
    let engines = [
        Engine::new(Strategy::FirstViolation, false),
        Engine::new(Strategy::LastViolation, true),
        Engine::new(Strategy::LastViolation, false),
    ];
    let mut moves = 0;
    for _ in 0..60 {
        let n = r.gen_range(3..=4);
        let (la, lb) = (r.gen_range(0..=4), r.gen_range(0..=4));
        let a = random_word(&mut r, n, la, true);
        let b = random_word(&mut r, n, lb, true);
        let ab = concat(&[&a, &b]);
        let base = reduce_tangle(&ab);
        let i = r.gen_range(0..n - 1);
        for pair in [[Slice::Pos(i), Slice::Neg(i)], [Slice::Neg(i), Slice::Pos(i)]] {
            let w = concat(&[&a, &slices(n, pair.to_vec()), &b]);
            ensure(reduce_tangle(&w) == base, || format!("R2 in {w}"))?;
            moves += 1;
        }
        let j = r.gen_range(0..n - 2);
        let (x, y) = if r.gen_bool(0.5) { (Slice::Pos(j), Slice::Pos(j + 1)) } else { (Slice::Neg(j), Slice::Neg(j + 1)) };
        let lhs = concat(&[&a, &slices(n, vec![x, y, x]), &b]);
        let rhs = concat(&[&a, &slices(n, vec![y, x, y]), &b]);
        ensure(reduce_tangle(&lhs) == reduce_tangle(&rhs), || format!("R3 in {lhs}"))?;
        moves += 1;
        for e in &engines {
            ensure(reduce_with(e, &ab) == base, || format!("memo/strategy mismatch on {ab}"))?;
        }
        ensure(kauffman_closure(&ab) == kauffman_closure(&concat(&[&b, &a])), || "trace property".into())?;
        // against the bracket state sum at A = 3
        let d = closure(&ab, Ambient::Plane).unwrap().diagram;
        let (al, s) = bracket_point(3);
        ensure(kauffman_closure(&ab).eval_mod(al, s, P) == Some(bracket_mod(&d, 3)), || format!("bracket on {ab}"))?;
    }
    for _ in 0..20 {
        let w1 = random_word(&mut r, 3, 5, false);
        let w2 = random_word(&mut r, 2, 4, true);
        let d1 = closure(&w1, Ambient::Plane).unwrap().diagram;
        let d2 = closure(&w2, Ambient::Plane).unwrap().diagram;
        let u = Diagram::disjoint_union(&d1, &d2);
        ensure(kauffman_diagram(&eng, &u) == kauffman_closure(&w1).mul(&kauffman_closure(&w2)), || "disjoint union".into())?;
        let wider = w1.tensor(&SliceWord::identity(1));
        for (s, k) in [(Slice::Pos(2), 1), (Slice::Neg(2), -1)] {
            let st = wider.compose(&slices(4, vec![s])).unwrap();
            ensure(kauffman_closure(&st) == kauffman_closure(&w1).mul(&RatFn::alpha_pow(k)), || "stabilization".into())?;
        }
    }
    Ok(Verdict::Pass(format!("{moves} Reidemeister II/III instances, 4 engine variants, bracket oracle")))
}

fn parity_filtered(h: &TorusElement, n: usize) -> bool {
    h.iter().all(|(l, _)| l.size() <= n && (n - l.size()).is_multiple_of(2))
}

fn c6_truncation() -> Check {
    let full = nightly();
    let st = IdempotentStore::new(4, None);
    let alg = st.algebra();
    let top = if full { 4 } else { 3 };
    let mut count = 0;
    for n in 1..=top {
        for m in Matching::all(n, n) {
            let x = TangleVector::basis(m.clone());
            let h = hat(&st, &x).map_err(|e| e.to_string())?;
            ensure(parity_filtered(&h, n), || format!("hat({m}) = {h}"))?;
            ensure(h.markov(&st).unwrap() == alg.trace(&x), || format!("hat({m}) loses the trace"))?;
            count += 1;
        }
    }
    // independence: the functionals "close in S³ with k meridians around the
    // core", k = 0..6, evaluated diagrammatically on each ŷ̃_λ
    let shapes = YoungDiagram::all_up_to(3);
    let mut rows = Vec::new();
    for l in &shapes {
        let mut y = st.section(l).map_err(|e| e.to_string())?.idempotent.clone();
        let mut row = Vec::new();
        for _ in 0..shapes.len() {
            row.push(alg.trace(&y));
            y = meridian(&st, &y).map_err(|e| e.to_string())?;
        }
        rows.push(row);
    }
    let rank = linalg::rank(&rows);
    ensure(rank == shapes.len(), || format!("rank {rank} of {}", shapes.len()))?;
    Ok(Verdict::Pass(format!(
        "{count} basis elements for n ≤ {top} in the parity span; ŷ̃_λ (|λ| ≤ 3) rank {rank}/{}{}",
        shapes.len(),
        nightly_note(full)
    )))
}

fn c7_handle_slides() -> Check {
    let t = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let st = IdempotentStore::new(4, Some(dir.path().to_path_buf()));
    let rep = s1s2_report(&st, 3, Some(dir.path())).map_err(|e| e.to_string())?;
    within(t, Duration::from_secs(1800), "report to |λ| ≤ 3")?;
    ensure(rep.rows.len() == 7, || format!("{} (λ, c) pairs", rep.rows.len()))?;
    // ε from relation (I); both signs are tried
    let eps = [1i32, -1]
        .into_iter()
        .find(|&e| rep.rows.iter().all(|r| r.ratio_i == Some(RatFn::s_pow(2 * e * r.content))))
        .ok_or("no ε fits the γ″ side")?;
    for r in &rep.rows {
        let want = st.qdim(&r.lambda_minus).unwrap().div(&st.qdim(&r.lambda).unwrap()).unwrap();
        ensure(r.prime_scalar.as_ref() == Some(&want), || format!("γ′ scalar at {} {}", r.lambda, r.cell))?;
    }
    let law = |ep: i32, r: &skein::torus::ReportRow| RatFn::alpha_pow(-2 * ep).mul(&RatFn::s_pow(2 * eps * r.content));
    let single = [1i32, -1].into_iter().any(|ep| rep.rows.iter().all(|r| r.ratio_ii.as_ref() == Some(&law(ep, r))));
    let bad: Vec<String> = rep
        .rows
        .iter()
        .filter(|r| r.content != 0)
        .map(|r| format!("{}({}): {}", r.lambda, r.cell, r.ratio_ii.as_ref().map_or("—".into(), |q| q.to_string())))
        .collect();
    for m in &rep.membership {
        let want = !m.mu.is_empty();
        ensure(m.in_span == want, || format!("ŷ̃{} membership {}", m.mu, m.in_span))?;
    }
    ensure(rep.membership.iter().filter(|m| m.mu.size() >= 1).count() == 3, || "|μ| = 1, 2 shapes".into())?;
    ensure(rep.table().contains("K(S¹×S²) = ⟨∅⟩ verified to |λ| ≤ 2"), || "report line".into())?;
    let common = format!(
        "γ′ = ⟨λ′⟩/⟨λ⟩ and γ″ = s^(2ε·cn)⟨λ′⟩/⟨λ⟩ with ε = {eps:+} on all 7 pairs; span ∋ ŷ̃_μ (1 ≤ |μ| ≤ 2), ∌ ŷ̃_∅; \"verified to |λ| ≤ 2\" printed; {:.1?}",
        t.elapsed()
    );
    if single {
        Ok(Verdict::Pass(common))
    } else {
        let observed = rep.convention.map_or("no sign fit".to_string(), |c| {
            format!("observed ε′ = {:+}, twist sign τ = {:+}", c.epsilon_prime, c.tau)
        });
        Ok(Verdict::Fail(format!(
            "no single ε: relation II ratio is α^(−2ε′)s^(−2ε·cn) ({observed}) [{}]; other clauses pass: {common}",
            bad.join(", ")
        )))
    }
}

fn c8_quantum_dimensions() -> Check {
    let st = IdempotentStore::new(3, None);
    let alg = st.algebra();
    for l in YoungDiagram::all_up_to(3) {
        ensure(st.qdim(&l).unwrap().is_invertible(), || format!("⟨{l}⟩ not invertible"))?;
    }
    let mut r = rng(801);
    for _ in 0..10 {
        let terms = random_combination(&mut r, 3);
        let x = combine(alg, &terms);
        let direct = terms
            .iter()
            .fold(RatFn::zero(), |acc, (k, w)| acc.add(&kauffman_closure(w).mul(&RatFn::from_int(*k))));
        let via = hat(&st, &x).map_err(|e| e.to_string())?.markov(&st).unwrap();
        ensure(via == direct, || "Σ coeff·⟨λ⟩ differs from the S³ evaluation".into())?;
    }
    Ok(Verdict::Pass("10 random elements of K₃; ⟨λ⟩ invertible for |λ| ≤ 3".into()))
}

fn c9_performance() -> Check {
    let full = nightly();
    let mut r = rng(901);
    let mut worst = Duration::ZERO;
    let mut words = vec![SliceWord::parse("s1 s2 s1 s2 s1 s2 s1 s2 s1 s2 s1 s2", 3).unwrap()];
    for _ in 0..5 {
        let n = r.gen_range(3..=5);
        let mut slices = Vec::new();
        while slices.len() < 12 {
            let i = r.gen_range(0..n - 1);
            slices.push(if r.gen_bool(0.5) { Slice::Pos(i) } else { Slice::Neg(i) });
        }
        words.push(SliceWord::new(n, slices).unwrap());
    }
    for w in &words {
        let eng = Engine::new(Strategy::FirstViolation, true);
        let d = closure(w, Ambient::Plane).unwrap().diagram;
        let t = Instant::now();
        let v = kauffman_diagram(&eng, &d);
        let e = t.elapsed();
        ensure(e <= Duration::from_secs(10), || format!("{w}: {e:?}"))?;
        worst = worst.max(e);
        let (al, s) = bracket_point(5);
        ensure(v.eval_mod(al, s, P) == Some(bracket_mod(&d, 5)), || format!("value of {w}"))?;
    }
    let mut note = "n = 4 idempotents: nightly job, skipped".to_string();
    if full {
        let st = IdempotentStore::new(4, None);
        let t = Instant::now();
        for l in YoungDiagram::all_of_size(4) {
            st.section(&l).map_err(|e| e.to_string())?;
        }
        note = format!("n = 4 idempotents (nightly) in {:.1?}", t.elapsed());
    }
    Ok(Verdict::Pass(format!("{} 12-crossing closures, slowest {worst:.1?}; {note}", words.len())))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("relation suite", c1_relations),
        ("dimension counts", c2_dimensions),
        ("section idempotents", c3_sections),
        ("tableau orthogonality", c4_orthogonality),
        ("skein engine", c5_engine),
        ("hat truncation", c6_truncation),
        ("handle-slide relations", c7_handle_slides),
        ("quantum dimensions", c8_quantum_dimensions),
        ("performance", c9_performance),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut unexpected = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let label = format!("criterion {}", k + 1);
        if !filter.is_empty() && !filter.iter().any(|p| label.contains(p.as_str()) || name.contains(p.as_str())) {
            continue;
        }
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(Verdict::Pass(d)) => println!("{label} [{name}]: PASS ({secs:.1}s) {d}"),
            Ok(Verdict::Fail(d)) => println!("{label} [{name}]: FAIL ({secs:.1}s) {d}"),
            Err(e) => {
                unexpected += 1;
                println!("{label} [{name}]: FAIL ({secs:.1}s) unexpected: {e}");
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
