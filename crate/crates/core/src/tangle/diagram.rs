use serde::{Deserialize, Serialize};

use super::word::{Slice, SliceWord};

/// Crossing type in the local picture with ports 0=TL, 1=TR, 2=BL, 3=BR.
///
/// `Pos`: the TL–BR strand is over. `Neg`: the TR–BL strand is over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CrossKind {
    Pos,
    Neg,
}

impl CrossKind {
    pub fn flipped(self) -> Self {
        match self {
            CrossKind::Pos => CrossKind::Neg,
            CrossKind::Neg => CrossKind::Pos,
        }
    }

    pub fn sign(self) -> i32 {
        match self {
            CrossKind::Pos => 1,
            CrossKind::Neg => -1,
        }
    }
}

/// The two ways to remove a crossing without a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothing {
    /// TL–BL and TR–BR, the identity slice.
    Vertical,
    /// TL–TR and BL–BR, the hook slice.
    Horizontal,
}

/// A tangle or link diagram as a fixed-point-free involution on ports.
///
/// Ports `0..top` are the top boundary points left to right, `top..top+bottom`
/// the bottom ones. Crossing `c` owns ports `nb + 4c + j`, `j` as in
/// [`CrossKind`]. Components without any port are counted in `free_loops`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    pub(crate) top: usize,
    pub(crate) bottom: usize,
    pub(crate) kinds: Vec<CrossKind>,
    pub(crate) link: Vec<usize>,
    pub(crate) free_loops: usize,
}

/// Through-strand partner of a crossing port (TL↔BR, TR↔BL).
#[inline]
pub(crate) fn through(j: usize) -> usize {
    j ^ 3
}

impl Diagram {
    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn crossings(&self) -> usize {
        self.kinds.len()
    }

    pub fn kinds(&self) -> &[CrossKind] {
        &self.kinds
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub(crate) fn nb(&self) -> usize {
        self.top + self.bottom
    }

    pub(crate) fn port(&self, c: usize, j: usize) -> usize {
        self.nb() + 4 * c + j
    }

    /// `(crossing, slot)` of a crossing port, `None` for boundary ports.
    pub(crate) fn owner(&self, p: usize) -> Option<(usize, usize)> {
        let nb = self.nb();
        (p >= nb).then(|| ((p - nb) / 4, (p - nb) % 4))
    }

    pub fn link(&self, p: usize) -> usize {
        self.link[p]
    }

    /// Builds the diagram of a slice word.
    pub fn from_word(w: &SliceWord) -> Diagram {
        let mut b = Builder::new(w.top(), w.bottom());
        let mut cur: Vec<usize> = (0..w.top()).collect();
        for s in w.slices() {
            match *s {
                Slice::Pos(i) | Slice::Neg(i) => {
                    let kind = if matches!(s, Slice::Pos(_)) {
                        CrossKind::Pos
                    } else {
                        CrossKind::Neg
                    };
                    let p = b.crossing(kind);
                    b.join(cur[i], p);
                    b.join(cur[i + 1], p + 1);
                    cur[i] = p + 2;
                    cur[i + 1] = p + 3;
                }
                Slice::Cup(i) => {
                    b.join(cur[i], cur[i + 1]);
                    cur.drain(i..i + 2);
                }
                Slice::Cap(i) => {
                    let v = b.virtual_pair();
                    cur.splice(i..i, [v, v + 1]);
                }
                Slice::Hook(i) => {
                    b.join(cur[i], cur[i + 1]);
                    let v = b.virtual_pair();
                    cur[i] = v;
                    cur[i + 1] = v + 1;
                }
                Slice::Id => {}
            }
        }
        for (j, &p) in cur.iter().enumerate() {
            b.join(p, w.top() + j);
        }
        b.finish()
    }

    /// Removes a 2-port pass-through `(x, y)`: joins the far ends of both.
    fn splice(link: &mut [usize], x: usize, y: usize) -> bool {
        let a = link[x];
        let b = link[y];
        if a == y {
            return true;
        }
        link[a] = b;
        link[b] = a;
        false
    }

    /// Deletes spliced-out crossings (and optionally the boundary), renumbering.
    fn compact(&mut self, dead: &[bool], dead_boundary: bool) {
        let nb_old = self.nb();
        let n_old = self.link.len();
        let mut new_id = vec![usize::MAX; n_old];
        let mut next = 0;
        if !dead_boundary {
            for (p, id) in new_id.iter_mut().enumerate().take(nb_old) {
                *id = p;
            }
            next = nb_old;
        }
        let mut kinds = Vec::with_capacity(self.kinds.len());
        for (c, k) in self.kinds.iter().enumerate() {
            if dead.get(c).copied().unwrap_or(false) {
                continue;
            }
            for j in 0..4 {
                new_id[nb_old + 4 * c + j] = next + j;
            }
            next += 4;
            kinds.push(*k);
        }
        let mut link = vec![0; next];
        for p in 0..n_old {
            if new_id[p] != usize::MAX {
                link[new_id[p]] = new_id[self.link[p]];
            }
        }
        self.link = link;
        self.kinds = kinds;
        if dead_boundary {
            self.top = 0;
            self.bottom = 0;
        }
    }

    /// The diagram with crossing `c` replaced by a smoothing.
    pub fn smoothed(&self, c: usize, how: Smoothing) -> Diagram {
        let mut d = self.clone();
        let p = self.port(c, 0);
        let pairs = match how {
            Smoothing::Vertical => [(p, p + 2), (p + 1, p + 3)],
            Smoothing::Horizontal => [(p, p + 1), (p + 2, p + 3)],
        };
        for (x, y) in pairs {
            if Self::splice(&mut d.link, x, y) {
                d.free_loops += 1;
            }
        }
        let mut dead = vec![false; self.kinds.len()];
        dead[c] = true;
        d.compact(&dead, false);
        d
    }

    /// The diagram with crossing `c` switched.
    pub fn switched(&self, c: usize) -> Diagram {
        let mut d = self.clone();
        d.kinds[c] = d.kinds[c].flipped();
        d
    }

    /// Joins top point `i` to bottom point `i` on the right of the picture.
    pub fn plane_closure(&self) -> Diagram {
        assert_eq!(self.top, self.bottom, "closure needs a square tangle");
        let mut d = self.clone();
        for i in 0..self.top {
            if Self::splice(&mut d.link, i, self.top + i) {
                d.free_loops += 1;
            }
        }
        d.compact(&[], true);
        d
    }

    /// Disjoint union, `other` placed to the right of `self`.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        assert!(self.nb() == 0 && other.nb() == 0, "union of closed diagrams only");
        let off = self.link.len();
        let mut link = self.link.clone();
        link.extend(other.link.iter().map(|p| p + off));
        let mut kinds = self.kinds.clone();
        kinds.extend_from_slice(&other.kinds);
        Diagram {
            top: 0,
            bottom: 0,
            kinds,
            link,
            free_loops: self.free_loops + other.free_loops,
        }
    }

    /// Components as lists of `(leave, arrive)` port pairs along each arc.
    ///
    /// Arcs are started from boundary points in increasing order, then
    /// closed components from the smallest unvisited crossing port.
    pub(crate) fn components_ports(&self) -> Vec<Vec<usize>> {
        let n = self.link.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut p = start;
            loop {
                // p is where we are: leave along the arc to link[p].
                seen[p] = true;
                comp.push(p);
                let q = self.link[p];
                seen[q] = true;
                comp.push(q);
                match self.owner(q) {
                    None => break,
                    Some((c, j)) => {
                        let r = self.port(c, through(j));
                        if r == start {
                            break;
                        }
                        p = r;
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Number of components, free loops included.
    pub fn components(&self) -> usize {
        self.components_ports().len() + self.free_loops
    }

    /// Sum over crossings whose two passes lie on one component of the
    /// signed crossing number.
    pub fn self_writhe(&self) -> i32 {
        let mut comp_of = vec![usize::MAX; self.kinds.len()];
        let mut dir_of = vec![0i32; self.kinds.len()];
        let mut w = 0;
        for (ci, comp) in self.components_ports().iter().enumerate() {
            for &q in comp.iter().skip(1).step_by(2) {
                if let Some((c, j)) = self.owner(q) {
                    let down = if j < 2 { 1 } else { -1 };
                    if comp_of[c] == ci {
                        w += self.kinds[c].sign() * down * dir_of[c];
                    } else {
                        comp_of[c] = ci;
                        dir_of[c] = down;
                    }
                }
            }
        }
        w
    }
}

/// Accumulates ports during construction. A fresh arc (from a cap) is a
/// virtual block whose ports 0 and 1 are its two ends; it is spliced out
/// by [`Builder::finish`].
struct Builder {
    top: usize,
    bottom: usize,
    link: Vec<usize>,
    kinds: Vec<Option<CrossKind>>,
}

const UNSET: usize = usize::MAX;

impl Builder {
    fn new(top: usize, bottom: usize) -> Self {
        Builder {
            top,
            bottom,
            link: vec![UNSET; top + bottom],
            kinds: Vec::new(),
        }
    }

    fn block(&mut self, k: Option<CrossKind>) -> usize {
        let p = self.link.len();
        self.link.extend([UNSET; 4]);
        self.kinds.push(k);
        p
    }

    fn crossing(&mut self, k: CrossKind) -> usize {
        self.block(Some(k))
    }

    fn virtual_pair(&mut self) -> usize {
        let p = self.block(None);
        self.link[p + 2] = p + 3;
        self.link[p + 3] = p + 2;
        p
    }

    fn join(&mut self, x: usize, y: usize) {
        debug_assert!(self.link[x] == UNSET && self.link[y] == UNSET);
        self.link[x] = y;
        self.link[y] = x;
    }

    fn finish(self) -> Diagram {
        let nb = self.top + self.bottom;
        let mut d = Diagram {
            top: self.top,
            bottom: self.bottom,
            kinds: self.kinds.iter().map(|k| k.unwrap_or(CrossKind::Pos)).collect(),
            link: self.link,
            free_loops: 0,
        };
        let dead: Vec<bool> = self.kinds.iter().map(Option::is_none).collect();
        for (b, &v) in dead.iter().enumerate() {
            if v {
                let p = nb + 4 * b;
                if Diagram::splice(&mut d.link, p, p + 1) {
                    d.free_loops += 1;
                }
            }
        }
        d.compact(&dead, false);
        d
    }
}
