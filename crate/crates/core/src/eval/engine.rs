use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use parking_lot::Mutex;

use super::lift::Matching;
use super::poly::SkeinPoly;
use crate::tangle::{through, CrossKind, Diagram, Smoothing};

/// Coordinates of a reduced tangle: one polynomial per boundary matching.
pub type Value = BTreeMap<Matching, SkeinPoly>;

/// Which order-violating crossing the recursion resolves first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    FirstViolation,
    LastViolation,
}

/// The descending-diagram skein recursion.
///
/// A diagram is descending when, walking its arcs in order of their
/// smallest boundary point (each from that point) and then its closed
/// components, every crossing is first met on the over strand. Such a
/// diagram is its matching's canonical lift up to kinks and split unknots.
/// Otherwise a violating crossing is switched using
/// `Pos − Neg = z (Vertical − Horizontal)`.
pub struct Engine {
    strategy: Strategy,
    memo: Option<Mutex<HashMap<Vec<u32>, Arc<Value>>>>,
}

struct Analysis {
    /// crossings in order of first visit
    order: Vec<usize>,
    /// order-violating crossings, in order of first visit
    violations: Vec<usize>,
    partner: Vec<usize>,
    closed: u32,
    writhe: i32,
}

fn is_over(kind: CrossKind, slot: usize) -> bool {
    (slot == 0 || slot == 3) == (kind == CrossKind::Pos)
}

fn analyze(d: &Diagram) -> Analysis {
    let total = d.link.len();
    let nc = d.crossings();
    let mut seen = vec![false; total];
    let mut first_dir = vec![0i32; nc];
    let mut comp_of = vec![usize::MAX; nc];
    let mut an = Analysis {
        order: Vec::with_capacity(nc),
        violations: Vec::new(),
        partner: vec![0; d.nb()],
        closed: 0,
        writhe: 0,
    };
    let mut comp = 0;
    for start in 0..total {
        if seen[start] {
            continue;
        }
        let mut p = start;
        loop {
            seen[p] = true;
            let q = d.link[p];
            seen[q] = true;
            match d.owner(q) {
                None => {
                    an.partner[start] = q;
                    an.partner[q] = start;
                    break;
                }
                Some((c, j)) => {
                    let dir = if j < 2 { 1 } else { -1 };
                    if comp_of[c] == usize::MAX {
                        comp_of[c] = comp;
                        first_dir[c] = dir;
                        an.order.push(c);
                        if !is_over(d.kinds[c], j) {
                            an.violations.push(c);
                        }
                    } else if comp_of[c] == comp {
                        an.writhe += d.kinds[c].sign() * dir * first_dir[c];
                    }
                    let r = d.port(c, through(j));
                    if r == start {
                        an.closed += 1;
                        break;
                    }
                    p = r;
                }
            }
        }
        comp += 1;
    }
    an
}

/// A crossing with two adjacent slots joined by a bare arc: the smoothing
/// that frees that loop and the sign of the kink.
fn find_kink(d: &Diagram) -> Option<(usize, Smoothing, i32)> {
    for c in 0..d.crossings() {
        let p = d.port(c, 0);
        for (i, j, how) in [
            (0, 1, Smoothing::Horizontal),
            (2, 3, Smoothing::Horizontal),
            (0, 2, Smoothing::Vertical),
            (1, 3, Smoothing::Vertical),
        ] {
            if d.link[p + i] == p + j {
                let down = |slot: usize| slot < 2;
                let same = down(through(i)) == down(j);
                let sign = d.kinds[c].sign() * if same { 1 } else { -1 };
                return Some((c, how, sign));
            }
        }
    }
    None
}

/// The diagram with crossings renumbered by `order`, as a flat key.
fn encode(d: &Diagram, order: &[usize]) -> Vec<u32> {
    let nb = d.nb();
    let nc = d.crossings();
    let mut new_of = vec![0usize; nc];
    for (k, &c) in order.iter().enumerate() {
        new_of[c] = k;
    }
    let map = |p: usize| -> usize {
        match d.owner(p) {
            None => p,
            Some((c, j)) => nb + 4 * new_of[c] + j,
        }
    };
    let mut key = Vec::with_capacity(2 + nc + d.link.len());
    key.push(d.top as u32);
    key.push(d.bottom as u32);
    for &c in order {
        key.push(d.kinds[c] as u32);
    }
    let mut link = vec![0u32; d.link.len()];
    for (p, &q) in d.link.iter().enumerate() {
        link[map(p)] = map(q) as u32;
    }
    key.extend(link);
    key
}

fn add_scaled(acc: &mut Value, v: &Value, c: i32, a: i32, s: i32, dl: u32) {
    for (m, p) in v {
        let e = acc.entry(m.clone()).or_default();
        e.add_scaled(p, c, a, s, dl);
        if e.is_zero() {
            acc.remove(m);
        }
    }
}

fn shifted(v: &Value, a: i32, s: i32, dl: u32) -> Value {
    v.iter()
        .map(|(m, p)| (m.clone(), p.shifted(a, s, dl)))
        .collect()
}

impl Engine {
    pub fn new(strategy: Strategy, memo: bool) -> Self {
        Engine {
            strategy,
            memo: memo.then(|| Mutex::new(HashMap::new())),
        }
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn memo_len(&self) -> usize {
        self.memo.as_ref().map_or(0, |m| m.lock().len())
    }

    pub fn clear(&self) {
        if let Some(m) = &self.memo {
            m.lock().clear();
        }
    }

    /// Coordinates of the diagram over the matchings of its boundary.
    pub fn evaluate(&self, d: &Diagram) -> Value {
        let loops = d.free_loops as u32;
        if loops == 0 {
            return (*self.eval_reduced(d)).clone();
        }
        let mut d0 = d.clone();
        d0.free_loops = 0;
        shifted(&self.eval_reduced(&d0), 0, 0, loops)
    }

    fn eval_reduced(&self, d: &Diagram) -> Arc<Value> {
        debug_assert_eq!(d.free_loops, 0);
        if let Some((c, how, sign)) = find_kink(d) {
            let mut d2 = d.smoothed(c, how);
            d2.free_loops -= 1;
            return Arc::new(shifted(&self.evaluate(&d2), sign, 0, 0));
        }
        let an = analyze(d);
        if an.violations.is_empty() {
            let m = Matching::from_partner_unchecked(d.top, d.bottom, an.partner);
            let mut v = Value::new();
            v.insert(m, SkeinPoly::monomial(an.writhe, 0, an.closed));
            return Arc::new(v);
        }
        let key = self.memo.as_ref().map(|_| encode(d, &an.order));
        if let (Some(memo), Some(key)) = (&self.memo, &key) {
            if let Some(v) = memo.lock().get(key) {
                return v.clone();
            }
        }
        let c = match self.strategy {
            Strategy::FirstViolation => an.violations[0],
            Strategy::LastViolation => *an.violations.last().unwrap(),
        };
        let sign = -d.kinds[c].sign();
        // X = X̄ ∓ z (V − H) with X̄ the switched crossing.
        let mut acc = self.evaluate(&d.switched(c));
        let vt = self.evaluate(&d.smoothed(c, Smoothing::Vertical));
        add_scaled(&mut acc, &vt, -sign, 0, 1, 0);
        add_scaled(&mut acc, &vt, sign, 0, -1, 0);
        let hz = self.evaluate(&d.smoothed(c, Smoothing::Horizontal));
        add_scaled(&mut acc, &hz, sign, 0, 1, 0);
        add_scaled(&mut acc, &hz, -sign, 0, -1, 0);
        let v = Arc::new(acc);
        if let (Some(memo), Some(key)) = (&self.memo, key) {
            memo.lock().entry(key).or_insert_with(|| v.clone());
        }
        v
    }
}
