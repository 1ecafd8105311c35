//! Partitions, skew diagrams and cell addressing.
//!
//! Throughout the crate a partition lists the *column* lengths of its Young
//! diagram: `(5,3,2)` is drawn as a column of five boxes, then three, then
//! two. Row lengths are obtained through [`Partition::transpose`]. Rows are
//! numbered from the top and columns from the left, both starting at 1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ShapeError;

/// A weakly decreasing sequence of positive integers (column lengths).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, ShapeError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(ShapeError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Partition whose row lengths are `rows` (i.e. the transpose of `rows`).
    pub fn from_row_lengths(rows: Vec<usize>) -> Result<Self, ShapeError> {
        Ok(Partition::new(rows)?.transpose())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero columns.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of column `c` (1-based); zero outside the diagram.
    pub fn col(&self, c: usize) -> usize {
        if c == 0 {
            return 0;
        }
        self.0.get(c - 1).copied().unwrap_or(0)
    }

    /// Length of row `r` (1-based), i.e. the `r`-th part of the transpose.
    pub fn row(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.0.iter().take_while(|&&p| p >= r).count()
    }

    /// Largest part (height of the first column), zero for the empty partition.
    pub fn first(&self) -> usize {
        self.col(1)
    }

    pub fn transpose(&self) -> Partition {
        let height = self.first();
        Partition((1..=height).map(|r| self.row(r)).collect())
    }

    /// True iff `inner` fits into `self` column by column.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.row <= self.col(cell.col)
    }

    /// Text form used on input and output: comma-separated parts.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    /// Accepts `5,3,2`, the digit shorthand `532`, and `()`/`0`/empty for the
    /// zero partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = || ShapeError::Parse(s.to_string());
        let parts: Vec<usize> = if t.contains(',') {
            t.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else if t.chars().all(|c| c.is_ascii_digit()) {
            t.chars().map(|c| c as usize - '0' as usize).collect()
        } else {
            return Err(bad());
        };
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = ShapeError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// A box of a Young diagram; `row` counts from the top, `col` from the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Cells of the skew diagram `outer \ inner` in row-major order.
pub fn skew_cells(outer: &Partition, inner: &Partition) -> Result<Vec<Cell>, ShapeError> {
    if !outer.contains(inner) {
        return Err(ShapeError::NotContained {
            outer: outer.clone(),
            inner: inner.clone(),
        });
    }
    let mut cells = Vec::with_capacity(outer.weight() - inner.weight());
    for r in 1..=outer.first() {
        for c in 1..=outer.row(r) {
            if r > inner.col(c) {
                cells.push(Cell::new(r, c));
            }
        }
    }
    Ok(cells)
}

/// True iff `outer \ inner` has at most one cell in every column.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> Result<bool, ShapeError> {
    if !outer.contains(inner) {
        return Err(ShapeError::NotContained {
            outer: outer.clone(),
            inner: inner.clone(),
        });
    }
    Ok((1..=outer.len()).all(|c| outer.col(c) - inner.col(c) <= 1))
}

/// Shape `(alpha, beta, gamma)`: a skew diagram `beta \ gamma` filled with
/// content `alpha` (`alpha'_l` entries equal to `l`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShapeTriple {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
}

impl ShapeTriple {
    pub fn new(alpha: Partition, beta: Partition, gamma: Partition) -> Result<Self, ShapeError> {
        if !beta.contains(&gamma) {
            return Err(ShapeError::NotContained {
                outer: beta,
                inner: gamma,
            });
        }
        if alpha.weight() + gamma.weight() != beta.weight() {
            return Err(ShapeError::WeightMismatch {
                alpha: alpha.weight(),
                beta: beta.weight(),
                gamma: gamma.weight(),
            });
        }
        Ok(ShapeTriple { alpha, beta, gamma })
    }

    /// The shape `(gamma, beta, alpha)` of the dual embedding; `None` when
    /// `alpha` does not fit inside `beta`.
    pub fn dual(&self) -> Option<ShapeTriple> {
        ShapeTriple::new(self.gamma.clone(), self.beta.clone(), self.alpha.clone()).ok()
    }

    pub fn cells(&self) -> Vec<Cell> {
        skew_cells(&self.beta, &self.gamma).expect("validated shape")
    }
}

impl fmt::Display for ShapeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})/({})", self.alpha, self.beta, self.gamma)
    }
}

impl FromStr for ShapeTriple {
    type Err = ShapeError;

    /// Parses `alpha/beta/gamma`, e.g. `42/532/31` or `4,2/5,3,2/3,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let pieces: Vec<&str> = s.split('/').collect();
        if pieces.len() != 3 {
            return Err(ShapeError::Parse(s.to_string()));
        }
        ShapeTriple::new(pieces[0].parse()?, pieces[1].parse()?, pieces[2].parse()?)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `outer` (including the empty one and `outer`).
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            let mut parts = cur.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition(parts));
            return;
        }
        for p in 0..=outer[i].min(max) {
            cur.push(p);
            rec(outer, i + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer.parts(), 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// Every valid shape triple with `1 <= |beta| <= max_weight`, in a fixed order.
pub fn shapes_up_to(max_weight: usize) -> Vec<ShapeTriple> {
    let mut out = Vec::new();
    for n in 1..=max_weight {
        for beta in partitions_of(n) {
            for gamma in subpartitions(&beta) {
                for alpha in partitions_of(n - gamma.weight()) {
                    out.push(ShapeTriple {
                        alpha,
                        beta: beta.clone(),
                        gamma: gamma.clone(),
                    });
                }
            }
        }
    }
    out
}
