use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tangle::{Slice, SliceWord};

/// A perfect matching of the boundary of an `(top, bottom)` tangle.
///
/// Points `0..top` are the top ones left to right, `top..top+bottom` the
/// bottom ones; `partner[p]` is the point joined to `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matching {
    top: usize,
    bottom: usize,
    partner: Vec<usize>,
}

impl Matching {
    pub fn new(top: usize, bottom: usize, partner: Vec<usize>) -> Option<Matching> {
        let n = top + bottom;
        let ok = partner.len() == n
            && partner
                .iter()
                .enumerate()
                .all(|(p, &q)| q < n && q != p && partner[q] == p);
        ok.then_some(Matching {
            top,
            bottom,
            partner,
        })
    }

    pub(crate) fn from_partner_unchecked(top: usize, bottom: usize, partner: Vec<usize>) -> Self {
        debug_assert!(Matching::new(top, bottom, partner.clone()).is_some());
        Matching {
            top,
            bottom,
            partner,
        }
    }

    pub fn identity(n: usize) -> Matching {
        let partner = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        Matching::from_partner_unchecked(n, n, partner)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Number of top–top pairs.
    pub fn caps_on_top(&self) -> usize {
        (0..self.top).filter(|&p| self.partner[p] < self.top).count() / 2
    }

    /// Through strands joining a top point to a bottom point.
    pub fn through_count(&self) -> usize {
        (0..self.top).filter(|&p| self.partner[p] >= self.top).count()
    }

    /// True when every top point is joined to a bottom point.
    pub fn is_permutation(&self) -> bool {
        self.top == self.bottom && self.through_count() == self.top
    }

    /// For a permutation matching, `perm[i]` is the bottom position of top `i`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        self.is_permutation()
            .then(|| (0..self.top).map(|p| self.partner[p] - self.top).collect())
    }

    pub fn from_permutation(perm: &[usize]) -> Matching {
        let n = perm.len();
        let mut partner = vec![0; 2 * n];
        for (i, &j) in perm.iter().enumerate() {
            partner[i] = n + j;
            partner[n + j] = i;
        }
        Matching::from_partner_unchecked(n, n, partner)
    }

    /// All matchings of an `(top, bottom)` boundary in a fixed order.
    pub fn all(top: usize, bottom: usize) -> Vec<Matching> {
        let n = top + bottom;
        let mut out = Vec::new();
        if n % 2 == 1 {
            return out;
        }
        let mut partner = vec![usize::MAX; n];
        fn rec(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let Some(p) = partner.iter().position(|&q| q == usize::MAX) else {
                out.push(partner.clone());
                return;
            };
            for q in p + 1..partner.len() {
                if partner[q] == usize::MAX {
                    partner[p] = q;
                    partner[q] = p;
                    rec(partner, out);
                    partner[p] = usize::MAX;
                    partner[q] = usize::MAX;
                }
            }
        }
        let mut raw = Vec::new();
        rec(&mut partner, &mut raw);
        out.extend(
            raw.into_iter()
                .map(|p| Matching::from_partner_unchecked(top, bottom, p)),
        );
        out
    }

    /// The canonical descending tangle realizing the matching.
    ///
    /// Top–top pairs are brought together and closed with `∪`s, through
    /// strands kept in order of their bottom points, bottom–bottom pairs
    /// opened with `∩`s and moved into place. Arcs are ranked by smallest
    /// endpoint and at every crossing the earlier arc is over, so the lift
    /// is descending and has no self-crossings.
    pub fn canonical_lift(&self) -> SliceWord {
        let (m, k) = (self.top, self.bottom);
        // rank of the arc through each endpoint
        let mut rank = vec![0; m + k];
        let mut r = 0;
        for p in 0..m + k {
            if self.partner[p] > p {
                rank[p] = r;
                rank[self.partner[p]] = r;
                r += 1;
            }
        }
        // Middle arrangement above the cups: top–top pairs (ordered by left
        // end), then through strands ordered by bottom point.
        let mut top_order: Vec<usize> = Vec::with_capacity(m);
        for p in 0..m {
            let q = self.partner[p];
            if q < m && q > p {
                top_order.push(p);
                top_order.push(q);
            }
        }
        let cups = top_order.len() / 2;
        let mut through: Vec<usize> = (0..m).filter(|&p| self.partner[p] >= m).collect();
        through.sort_by_key(|&p| self.partner[p]);
        top_order.extend(&through);

        let mut slices = Vec::new();
        // Sort the strands into top_order; cur[i] is the top point at i.
        let mut cur: Vec<usize> = (0..m).collect();
        let target: Vec<usize> = {
            let mut t = vec![0; m];
            for (pos, &p) in top_order.iter().enumerate() {
                t[p] = pos;
            }
            t
        };
        bubble(&mut cur, |p| target[p], |a, b| rank[a] < rank[b], &mut slices);
        slices.extend(std::iter::repeat_n(Slice::Cup(0), cups));

        // Below: bottom–bottom pairs at the left, then through strands.
        let mut bottom_order: Vec<usize> = Vec::with_capacity(k);
        for b in m..m + k {
            let q = self.partner[b];
            if q >= m && q > b {
                bottom_order.push(b);
                bottom_order.push(q);
            }
        }
        let caps = bottom_order.len() / 2;
        // the caps are created in reverse so the first pair ends up leftmost
        slices.extend(std::iter::repeat_n(Slice::Cap(0), caps));
        let mut below: Vec<usize> = bottom_order.clone();
        below.extend(through.iter().map(|&p| self.partner[p]));
        let mut cur = below;
        bubble(&mut cur, |b| b - m, |a, b| rank[a] < rank[b], &mut slices);
        SliceWord::new(m, slices).expect("canonical lift fits its boundary")
    }
}

/// Bubble-sorts `cur` by `key`, recording one crossing per swap; the strand
/// for which `over` holds passes over.
fn bubble(
    cur: &mut [usize],
    key: impl Fn(usize) -> usize,
    over: impl Fn(usize, usize) -> bool,
    slices: &mut Vec<Slice>,
) {
    let n = cur.len();
    for pass in 0..n {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1 + pass) {
            if key(cur[i]) > key(cur[i + 1]) {
                slices.push(if over(cur[i], cur[i + 1]) {
                    Slice::Pos(i)
                } else {
                    Slice::Neg(i)
                });
                cur.swap(i, i + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |p: usize| {
            if p < self.top {
                format!("{}", p + 1)
            } else {
                format!("{}'", p - self.top + 1)
            }
        };
        let pairs: Vec<String> = (0..self.partner.len())
            .filter(|&p| self.partner[p] > p)
            .map(|p| format!("{}-{}", name(p), name(self.partner[p])))
            .collect();
        write!(f, "{{{}}}", pairs.join(","))
    }
}
