//! Framed tangles as slice words, their diagrams and closures.

mod diagram;
mod word;

pub use diagram::{CrossKind, Diagram, Smoothing};
pub(crate) use diagram::through;
pub use word::{e, e_inv, h, wrap_braid, Slice, SliceWord};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TangleError {
    #[error("slice {slice:?} at position {index} does not fit {strands} strands")]
    SliceOutOfRange {
        slice: Slice,
        index: usize,
        strands: usize,
    },
    #[error("cannot stack {upper} bottom points onto {lower} top points")]
    BoundaryMismatch { upper: usize, lower: usize },
    #[error("cannot parse slice token {0:?}")]
    Syntax(String),
    #[error("closure needs equal top and bottom counts, got {top} and {bottom}")]
    NotSquare { top: usize, bottom: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    Plane,
    Annulus,
}

/// A closed diagram together with where it lives.
///
/// For the annulus, `windings` holds for each component the signed number
/// of times it runs around the core (a closure arc traversed bottom to top
/// counts +1); each component is oriented from its smallest port.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    pub diagram: Diagram,
    pub ambient: Ambient,
    pub windings: Vec<i32>,
}

impl LinkDiagram {
    pub fn crossings(&self) -> usize {
        self.diagram.crossings()
    }

    pub fn components(&self) -> usize {
        self.diagram.components()
    }

    pub fn writhe(&self) -> i32 {
        self.diagram.self_writhe()
    }
}

/// Closes a square tangle word, top point `i` joined to bottom point `i`.
pub fn closure(t: &SliceWord, ambient: Ambient) -> Result<LinkDiagram, TangleError> {
    if !t.is_square() {
        return Err(TangleError::NotSquare {
            top: t.top(),
            bottom: t.bottom(),
        });
    }
    let open = Diagram::from_word(t);
    let windings = match ambient {
        Ambient::Plane => Vec::new(),
        Ambient::Annulus => windings(&open),
    };
    Ok(LinkDiagram {
        diagram: open.plane_closure(),
        ambient,
        windings,
    })
}

/// Per-component winding numbers of the annular closure of `d`.
fn windings(d: &Diagram) -> Vec<i32> {
    let n = d.top();
    let total = d.link.len();
    let mut seen = vec![false; total];
    let mut out = Vec::new();
    for start in 0..total {
        if seen[start] {
            continue;
        }
        let mut w = 0;
        let mut p = start;
        loop {
            seen[p] = true;
            let q = d.link[p];
            seen[q] = true;
            let next = match d.owner(q) {
                Some((c, j)) => d.port(c, through(j)),
                None if q >= n => {
                    w += 1;
                    q - n
                }
                None => {
                    w -= 1;
                    q + n
                }
            };
            if next == start {
                break;
            }
            p = next;
        }
        out.push(w);
    }
    out.extend(std::iter::repeat_n(0, d.free_loops()));
    out
}

#[cfg(test)]
mod tests;
