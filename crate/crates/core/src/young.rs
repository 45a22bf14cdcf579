//! Young diagrams, cells, contents and up-down tableaux.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YoungError {
    #[error("malformed diagram {0:?}: expected e.g. \"[3,1]\" or \"[]\"")]
    Syntax(String),
    #[error("rows must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("cell {0} cannot be removed from {1}")]
    NotExtreme(Cell, YoungDiagram),
    #[error("cell {0} cannot be added to {1}")]
    NotAddable(Cell, YoungDiagram),
}

/// A partition shape in English notation; `rows` is weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

/// A cell, 1-indexed by row and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }

    /// `col − row`
    pub fn content(&self) -> i32 {
        self.col as i32 - self.row as i32
    }
}

/// `cn(c) = col − row`
pub fn content(c: Cell) -> i32 {
    c.content()
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.row, self.col)
    }
}

impl FromStr for Cell {
    type Err = YoungError;
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || YoungError::Syntax(text.to_string());
        let (r, c) = text.trim().split_once(',').ok_or_else(bad)?;
        let row: u32 = r.trim().parse().map_err(|_| bad())?;
        let col: u32 = c.trim().parse().map_err(|_| bad())?;
        if row == 0 || col == 0 {
            return Err(bad());
        }
        Ok(Cell { row, col })
    }
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = YoungError;
    fn try_from(rows: Vec<u32>) -> Result<Self, Self::Error> {
        YoungDiagram::new(rows)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(d: YoungDiagram) -> Self {
        d.rows
    }
}

impl YoungDiagram {
    pub fn new(rows: Vec<u32>) -> Result<Self, YoungError> {
        let ok = rows.iter().all(|&r| r >= 1) && rows.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(YoungError::NotAPartition(rows));
        }
        Ok(YoungDiagram { rows })
    }

    /// Panicking constructor for literals in code and tests.
    pub fn from_rows(rows: &[u32]) -> Self {
        Self::new(rows.to_vec()).expect("valid partition")
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|&r| r as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The conjugate (transposed) diagram.
    pub fn transpose(&self) -> Self {
        let width = self.rows.first().copied().unwrap_or(0);
        let cols = (1..=width)
            .map(|c| self.rows.iter().filter(|&&r| r >= c).count() as u32)
            .collect();
        YoungDiagram { rows: cols }
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1
            && c.col >= 1
            && (c.row as usize) <= self.rows.len()
            && c.col <= self.rows[c.row as usize - 1]
    }

    /// Cells in row-reading order.
    pub fn cells(&self) -> Vec<Cell> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| Cell::new(i as u32 + 1, c)))
            .collect()
    }

    /// Cells whose removal leaves a Young diagram, top row first.
    pub fn extreme_cells(&self) -> Vec<Cell> {
        let n = self.rows.len();
        (0..n)
            .filter(|&i| i + 1 == n || self.rows[i + 1] < self.rows[i])
            .map(|i| Cell::new(i as u32 + 1, self.rows[i]))
            .collect()
    }

    /// Cells whose addition gives a Young diagram, top row first.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let n = self.rows.len();
        let mut out: Vec<Cell> = (0..n)
            .filter(|&i| i == 0 || self.rows[i - 1] > self.rows[i])
            .map(|i| Cell::new(i as u32 + 1, self.rows[i] + 1))
            .collect();
        out.push(Cell::new(n as u32 + 1, 1));
        out
    }

    pub fn remove_cell(&self, c: Cell) -> Result<Self, YoungError> {
        if !self.extreme_cells().contains(&c) {
            return Err(YoungError::NotExtreme(c, self.clone()));
        }
        let mut rows = self.rows.clone();
        rows[c.row as usize - 1] -= 1;
        if rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(YoungDiagram { rows })
    }

    pub fn add_cell(&self, c: Cell) -> Result<Self, YoungError> {
        if !self.addable_cells().contains(&c) {
            return Err(YoungError::NotAddable(c, self.clone()));
        }
        let mut rows = self.rows.clone();
        if c.row as usize > rows.len() {
            rows.push(1);
        } else {
            rows[c.row as usize - 1] += 1;
        }
        Ok(YoungDiagram { rows })
    }

    /// The cell by which `self` and `other` differ, if they differ by one.
    pub fn cell_difference(&self, other: &Self) -> Option<Cell> {
        let (big, small) = match self.size().cmp(&other.size()) {
            Ordering::Greater => (self, other),
            Ordering::Less => (other, self),
            Ordering::Equal => return None,
        };
        if big.size() != small.size() + 1 {
            return None;
        }
        big.extreme_cells()
            .into_iter()
            .find(|&c| big.remove_cell(c).as_ref() == Ok(small))
    }

    /// All diagrams with exactly `n` cells, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Self> {
        fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
            if rem == 0 {
                out.push(YoungDiagram { rows: cur.clone() });
                return;
            }
            for r in (1..=rem.min(max)).rev() {
                cur.push(r);
                go(rem - r, r, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }

    /// All diagrams with at most `n` cells, smallest first.
    pub fn all_up_to(n: usize) -> Vec<Self> {
        (0..=n).flat_map(Self::all_of_size).collect()
    }
}

impl PartialOrd for YoungDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Size first, then reverse lexicographic on rows: `∅ < (1) < (2) < (1,1) < (3) < …`.
impl Ord for YoungDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.rows.cmp(&self.rows))
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = YoungError;
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| YoungError::Syntax(text.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let rows = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| YoungError::Syntax(text.to_string()))?;
        Self::new(rows)
    }
}

/// A sequence of shapes starting at the single cell, each step adding or
/// removing exactly one cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UpDownTableau {
    shapes: Vec<YoungDiagram>,
}

impl UpDownTableau {
    pub fn new(shapes: Vec<YoungDiagram>) -> Option<Self> {
        let first_ok = shapes.first() == Some(&YoungDiagram::from_rows(&[1]));
        let steps_ok = shapes.windows(2).all(|w| w[0].cell_difference(&w[1]).is_some());
        (first_ok && steps_ok).then_some(UpDownTableau { shapes })
    }

    pub fn shapes(&self) -> &[YoungDiagram] {
        &self.shapes
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    pub fn shape(&self) -> &YoungDiagram {
        self.shapes.last().expect("tableaux are nonempty")
    }

    /// The tableau with its last shape removed; `None` at length 1.
    pub fn parent(&self) -> Option<Self> {
        (self.shapes.len() > 1).then(|| UpDownTableau {
            shapes: self.shapes[..self.shapes.len() - 1].to_vec(),
        })
    }

    /// True when the last step added a cell.
    pub fn last_step_up(&self) -> bool {
        let n = self.shapes.len();
        n == 1 || self.shapes[n - 1].size() > self.shapes[n - 2].size()
    }
}

impl fmt::Display for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shapes.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// All up-down tableaux of length `n`, optionally ending at `end_shape`.
///
/// Order: depth-first, removals before additions at each step, cells top row first.
pub fn enumerate_updown(n: usize, end_shape: Option<&YoungDiagram>) -> Vec<UpDownTableau> {
    fn go(
        n: usize,
        cur: &mut Vec<YoungDiagram>,
        end: Option<&YoungDiagram>,
        out: &mut Vec<UpDownTableau>,
    ) {
        let last = cur.last().unwrap().clone();
        if cur.len() == n {
            if end.is_none_or(|e| *e == last) {
                out.push(UpDownTableau { shapes: cur.clone() });
            }
            return;
        }
        let remaining = n - cur.len();
        let mut nexts: Vec<YoungDiagram> = last
            .extreme_cells()
            .into_iter()
            .map(|c| last.remove_cell(c).unwrap())
            .collect();
        nexts.extend(last.addable_cells().into_iter().map(|c| last.add_cell(c).unwrap()));
        for next in nexts {
            if let Some(e) = end {
                // Prune: the end shape must stay reachable.
                if e.size().abs_diff(next.size()) > remaining - 1 {
                    continue;
                }
            }
            cur.push(next);
            go(n, cur, end, out);
            cur.pop();
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(n, &mut vec![YoungDiagram::from_rows(&[1])], end_shape, &mut out);
    out
}
