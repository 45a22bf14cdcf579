use std::fmt;

use serde::{Deserialize, Serialize};

use super::TangleError;

/// One horizontal slice of a tangle read top to bottom.
///
/// Positions are 0-based strand indices at the top of the slice.
/// `Pos(i)`: the strand entering at `i` passes over the one entering at `i+1`.
/// `Neg(i)`: the strand entering at `i+1` passes over.
/// `Cup(i)`: strands `i`, `i+1` are joined and end (a `∪`), count drops by 2.
/// `Cap(i)`: two new strands start at `i`, `i+1` (a `∩`), count grows by 2.
/// `Hook(i)`: `Cup(i)` followed by `Cap(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Slice {
    Pos(usize),
    Neg(usize),
    Hook(usize),
    Cup(usize),
    Cap(usize),
    Id,
}

impl Slice {
    /// Strand count below the slice given the count above, if valid.
    pub fn apply(&self, strands: usize) -> Option<usize> {
        match *self {
            Slice::Pos(i) | Slice::Neg(i) | Slice::Hook(i) => (i + 1 < strands).then_some(strands),
            Slice::Cup(i) => (i + 1 < strands).then(|| strands - 2),
            Slice::Cap(i) => (i <= strands).then_some(strands + 2),
            Slice::Id => Some(strands),
        }
    }

    fn shifted(&self, by: usize) -> Slice {
        match *self {
            Slice::Pos(i) => Slice::Pos(i + by),
            Slice::Neg(i) => Slice::Neg(i + by),
            Slice::Hook(i) => Slice::Hook(i + by),
            Slice::Cup(i) => Slice::Cup(i + by),
            Slice::Cap(i) => Slice::Cap(i + by),
            Slice::Id => Slice::Id,
        }
    }

    /// The slice seen in a mirror (over and under exchanged).
    pub fn mirrored(&self) -> Slice {
        match *self {
            Slice::Pos(i) => Slice::Neg(i),
            Slice::Neg(i) => Slice::Pos(i),
            other => other,
        }
    }
}

/// A framed tangle as a word of slices, `top` strands entering from above.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SliceWord {
    top: usize,
    bottom: usize,
    slices: Vec<Slice>,
}

impl SliceWord {
    pub fn identity(n: usize) -> Self {
        SliceWord {
            top: n,
            bottom: n,
            slices: Vec::new(),
        }
    }

    pub fn new(top: usize, slices: Vec<Slice>) -> Result<Self, TangleError> {
        let mut n = top;
        for (k, s) in slices.iter().enumerate() {
            n = s.apply(n).ok_or(TangleError::SliceOutOfRange {
                slice: *s,
                index: k,
                strands: n,
            })?;
        }
        Ok(SliceWord {
            top,
            bottom: n,
            slices: slices.into_iter().filter(|s| *s != Slice::Id).collect(),
        })
    }

    pub fn single(n: usize, s: Slice) -> Result<Self, TangleError> {
        Self::new(n, vec![s])
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// Strand count of a square word.
    pub fn strands(&self) -> usize {
        debug_assert_eq!(self.top, self.bottom);
        self.top
    }

    pub fn is_square(&self) -> bool {
        self.top == self.bottom
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }

    /// Number of crossing slices.
    pub fn crossings(&self) -> usize {
        self.slices
            .iter()
            .filter(|s| matches!(s, Slice::Pos(_) | Slice::Neg(_)))
            .count()
    }

    /// `self` stacked on top of `other`.
    pub fn compose(&self, other: &SliceWord) -> Result<SliceWord, TangleError> {
        if self.bottom != other.top {
            return Err(TangleError::BoundaryMismatch {
                upper: self.bottom,
                lower: other.top,
            });
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&other.slices);
        Ok(SliceWord {
            top: self.top,
            bottom: other.bottom,
            slices,
        })
    }

    /// Side-by-side juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &SliceWord) -> SliceWord {
        let mut slices = self.slices.clone();
        slices.extend(other.slices.iter().map(|s| s.shifted(self.bottom)));
        SliceWord {
            top: self.top + other.top,
            bottom: self.bottom + other.bottom,
            slices,
        }
    }

    /// The word read bottom to top with crossings inverted, so that
    /// `w · w.inverse()` is isotopic to the identity for braids.
    pub fn inverse(&self) -> SliceWord {
        let slices = self
            .slices
            .iter()
            .rev()
            .map(|s| match *s {
                Slice::Pos(i) => Slice::Neg(i),
                Slice::Neg(i) => Slice::Pos(i),
                Slice::Cup(i) => Slice::Cap(i),
                Slice::Cap(i) => Slice::Cup(i),
                other => other,
            })
            .collect();
        SliceWord {
            top: self.bottom,
            bottom: self.top,
            slices,
        }
    }

    pub fn mirrored(&self) -> SliceWord {
        SliceWord {
            slices: self.slices.iter().map(Slice::mirrored).collect(),
            ..self.clone()
        }
    }

    /// Parses `"s1 s2^-1 h1"` on `strands` strands (1-based indices).
    ///
    /// Also accepted: `u1` for a `∪` and `n1` for a `∩` at positions 1,2.
    pub fn parse(text: &str, strands: usize) -> Result<SliceWord, TangleError> {
        let mut slices = Vec::new();
        for tok in text.split_whitespace() {
            slices.push(parse_token(tok)?);
        }
        Self::new(strands, slices)
    }

    /// Parses a square braid-like word, taking the strand count as one
    /// more than the largest index (at least 1).
    pub fn parse_infer(text: &str) -> Result<SliceWord, TangleError> {
        let mut max = 0;
        for tok in text.split_whitespace() {
            if let Some(i) = slice_index(&parse_token(tok)?) {
                max = max.max(i + 2);
            }
        }
        Self::parse(text, max.max(1))
    }
}

fn slice_index(s: &Slice) -> Option<usize> {
    match *s {
        Slice::Pos(i) | Slice::Neg(i) | Slice::Hook(i) | Slice::Cup(i) | Slice::Cap(i) => Some(i),
        Slice::Id => None,
    }
}

fn parse_token(tok: &str) -> Result<Slice, TangleError> {
    let bad = || TangleError::Syntax(tok.to_string());
    let (head, rest) = tok.split_at(1.min(tok.len()));
    let (idx, inverse) = match rest.split_once('^') {
        Some((i, "-1")) => (i, true),
        Some((i, "1")) => (i, false),
        Some(_) => return Err(bad()),
        None => (rest, false),
    };
    let i: usize = idx.parse().map_err(|_| bad())?;
    if i == 0 {
        return Err(TangleError::Syntax(tok.to_string()));
    }
    let i = i - 1;
    match (head, inverse) {
        ("s", false) => Ok(Slice::Pos(i)),
        ("s", true) => Ok(Slice::Neg(i)),
        ("h", false) => Ok(Slice::Hook(i)),
        ("u", false) => Ok(Slice::Cup(i)),
        ("n", false) => Ok(Slice::Cap(i)),
        _ => Err(bad()),
    }
}

impl fmt::Display for SliceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slices.is_empty() {
            return write!(f, "1_{}", self.top);
        }
        let toks: Vec<String> = self
            .slices
            .iter()
            .map(|s| match *s {
                Slice::Pos(i) => format!("s{}", i + 1),
                Slice::Neg(i) => format!("s{}^-1", i + 1),
                Slice::Hook(i) => format!("h{}", i + 1),
                Slice::Cup(i) => format!("u{}", i + 1),
                Slice::Cap(i) => format!("n{}", i + 1),
                Slice::Id => String::new(),
            })
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// `σ_{n−1} ⋯ σ₁ σ₁ ⋯ σ_{n−1}`: strand `n` travels once around strands `1..n−1`.
pub fn wrap_braid(n: usize) -> SliceWord {
    assert!(n >= 1, "wrap_braid needs at least one strand");
    let mut slices: Vec<Slice> = (0..n - 1).rev().map(Slice::Pos).collect();
    slices.extend((0..n - 1).map(Slice::Pos));
    SliceWord::new(n, slices).expect("indices in range")
}

/// `e_i` on `n` strands (1-based `i`).
pub fn e(n: usize, i: usize) -> SliceWord {
    SliceWord::single(n, Slice::Pos(i - 1)).expect("index in range")
}

/// `e_i^{-1}` on `n` strands (1-based `i`).
pub fn e_inv(n: usize, i: usize) -> SliceWord {
    SliceWord::single(n, Slice::Neg(i - 1)).expect("index in range")
}

/// `h_i` on `n` strands (1-based `i`).
pub fn h(n: usize, i: usize) -> SliceWord {
    SliceWord::single(n, Slice::Hook(i - 1)).expect("index in range")
}
