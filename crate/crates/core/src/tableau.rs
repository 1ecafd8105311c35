//! Skew tableaux, the LR and socle axioms, partition-chain views and
//! exhaustive enumeration.
//!
//! A [`SkewTableau`] is a filling of `beta \ gamma` whose content is given by
//! `alpha`: the entry `l` occurs exactly `alpha'_l` times. Whether the filling
//! is an LR-tableau or a socle tableau is decided by [`check_lr`] and
//! [`check_socle`].
//!
//! The socle lattice condition comes in three equivalent forms: counting
//! entries to the left of every vertical line ([`check_socle`]), counting in
//! and below every row ([`check_row_lattice`]), and the existence of a matching
//! of the entries `l+1` into the entries `l` ([`build_matching`]).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::TableauError;
use crate::partition::{is_horizontal_strip, skew_cells, Cell, Partition, ShapeTriple};

/// Which family of tableaux a filling is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableauKind {
    /// Rows weakly decreasing, columns strictly decreasing, lattice condition
    /// counted from the left.
    Socle,
    /// Rows weakly increasing, columns strictly increasing, lattice condition
    /// counted from the right.
    Lr,
}

impl TableauKind {
    pub fn name(self) -> &'static str {
        match self {
            TableauKind::Socle => "socle",
            TableauKind::Lr => "lr",
        }
    }
}

impl std::str::FromStr for TableauKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "socle" | "st" => Ok(TableauKind::Socle),
            "lr" => Ok(TableauKind::Lr),
            _ => Err(format!("unknown tableau kind {s:?}")),
        }
    }
}

/// A filling of the skew diagram `beta \ gamma` with content `alpha`.
///
/// Entries are stored in row-major order of the skew cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: ShapeTriple,
    cells: Vec<Cell>,
    entries: Vec<usize>,
}

impl SkewTableau {
    /// Builds a tableau from entries listed in row-major cell order.
    pub fn new(shape: ShapeTriple, entries: Vec<usize>) -> Result<Self, TableauError> {
        let cells = skew_cells(&shape.beta, &shape.gamma)?;
        if cells.len() != entries.len() {
            return Err(TableauError::EntryCount {
                expected: cells.len(),
                got: entries.len(),
            });
        }
        let max = shape.alpha.first();
        for (&cell, &entry) in cells.iter().zip(&entries) {
            if entry == 0 || entry > max {
                return Err(TableauError::EntryOutOfRange { cell, entry, max });
            }
        }
        let content = shape.alpha.transpose();
        let mut counts = vec![0usize; max + 1];
        for &e in &entries {
            counts[e] += 1;
        }
        for (l, &got) in counts.iter().enumerate().take(max + 1).skip(1) {
            if got != content.col(l) {
                return Err(TableauError::Content {
                    entry: l,
                    expected: content.col(l),
                    got,
                });
            }
        }
        Ok(SkewTableau { shape, cells, entries })
    }

    /// Builds a tableau from a map cell -> entry covering exactly the skew cells.
    pub fn from_map(shape: ShapeTriple, map: &BTreeMap<Cell, usize>) -> Result<Self, TableauError> {
        let cells = skew_cells(&shape.beta, &shape.gamma)?;
        if map.len() != cells.len() {
            return Err(TableauError::EntryCount {
                expected: cells.len(),
                got: map.len(),
            });
        }
        let entries = cells
            .iter()
            .map(|c| {
                map.get(c)
                    .copied()
                    .ok_or_else(|| TableauError::Grid(format!("no entry for cell {c}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        SkewTableau::new(shape, entries)
    }

    /// The tableau with empty content on `beta \ beta`.
    pub fn empty(beta: Partition) -> Self {
        SkewTableau {
            shape: ShapeTriple {
                alpha: Partition::empty(),
                beta: beta.clone(),
                gamma: beta,
            },
            cells: Vec::new(),
            entries: Vec::new(),
        }
    }

    pub fn shape(&self) -> &ShapeTriple {
        &self.shape
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.cells.iter().copied().zip(self.entries.iter().copied())
    }

    /// Largest entry, `alpha_1`.
    pub fn max_entry(&self) -> usize {
        self.shape.alpha.first()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        self.cells.binary_search(&cell).ok().map(|i| self.entries[i])
    }

    /// Number of entries equal to `entry` in row `row`.
    pub fn multiplicity(&self, entry: usize, row: usize) -> usize {
        self.iter().filter(|&(c, e)| c.row == row && e == entry).count()
    }

    /// Table `mu[entry][row]` of multiplicities, indices from 1.
    pub fn multiplicities(&self) -> Vec<Vec<usize>> {
        let rows = self.shape.beta.first();
        let mut mu = vec![vec![0; rows + 1]; self.max_entry() + 1];
        for (c, e) in self.iter() {
            mu[e][c.row] += 1;
        }
        mu
    }

    /// Grid with one row per row of `beta`: 0 marks a `gamma` cell.
    pub fn to_grid(&self) -> Vec<Vec<usize>> {
        let beta = &self.shape.beta;
        let mut grid: Vec<Vec<usize>> = (1..=beta.first()).map(|r| vec![0; beta.row(r)]).collect();
        for (c, e) in self.iter() {
            grid[c.row - 1][c.col - 1] = e;
        }
        grid
    }

    pub fn from_grid(
        alpha: Partition,
        beta: Partition,
        gamma: Partition,
        grid: &[Vec<usize>],
    ) -> Result<Self, TableauError> {
        if grid.len() != beta.first() {
            return Err(TableauError::Grid(format!(
                "expected {} rows, got {}",
                beta.first(),
                grid.len()
            )));
        }
        let mut entries = Vec::new();
        for (i, row) in grid.iter().enumerate() {
            let r = i + 1;
            if row.len() != beta.row(r) {
                return Err(TableauError::Grid(format!(
                    "row {r} has length {}, expected {}",
                    row.len(),
                    beta.row(r)
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                let in_gamma = gamma.contains_cell(Cell::new(r, j + 1));
                match (in_gamma, v) {
                    (true, 0) => {}
                    (false, e) if e > 0 => entries.push(e),
                    _ => {
                        return Err(TableauError::Grid(format!(
                            "cell ({r},{}) holds {v}, inconsistent with gamma",
                            j + 1
                        )))
                    }
                }
            }
        }
        SkewTableau::new(ShapeTriple::new(alpha, beta, gamma)?, entries)
    }

    pub fn to_json_value(&self) -> TableauJson {
        TableauJson {
            alpha: self.shape.alpha.parts().to_vec(),
            beta: self.shape.beta.parts().to_vec(),
            gamma: self.shape.gamma.parts().to_vec(),
            grid: self.to_grid(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, TableauError> {
        let raw: TableauJson = serde_json::from_str(text).map_err(|e| TableauError::Grid(e.to_string()))?;
        raw.into_tableau()
    }

    /// One text line per row: `.` for `gamma` cells, digits for entries,
    /// `[12]` for entries of two or more digits.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for row in self.to_grid() {
            for v in row {
                match v {
                    0 => out.push('.'),
                    1..=9 => out.push_str(&v.to_string()),
                    _ => out.push_str(&format!("[{v}]")),
                }
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// Serialized form `{"alpha":..,"beta":..,"gamma":..,"grid":..}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub gamma: Vec<usize>,
    pub grid: Vec<Vec<usize>>,
}

impl TableauJson {
    pub fn into_tableau(self) -> Result<SkewTableau, TableauError> {
        SkewTableau::from_grid(
            Partition::new(self.alpha)?,
            Partition::new(self.beta)?,
            Partition::new(self.gamma)?,
            &self.grid,
        )
    }
}

fn rows_ordered(t: &SkewTableau, kind: TableauKind) -> bool {
    t.cells.windows(2).zip(t.entries.windows(2)).all(|(c, e)| {
        c[0].row != c[1].row
            || match kind {
                TableauKind::Lr => e[0] <= e[1],
                TableauKind::Socle => e[0] >= e[1],
            }
    })
}

fn columns_ordered(t: &SkewTableau, kind: TableauKind) -> bool {
    let mut last: BTreeMap<usize, usize> = BTreeMap::new();
    for (c, e) in t.iter() {
        if let Some(&above) = last.get(&c.col) {
            let ok = match kind {
                TableauKind::Lr => above < e,
                TableauKind::Socle => above > e,
            };
            if !ok {
                return false;
            }
        }
        last.insert(c.col, e);
    }
    true
}

/// Count table `count[col][entry]` (both 1-based).
fn column_counts(t: &SkewTableau) -> Vec<Vec<usize>> {
    let ncols = t.shape.beta.len();
    let mut counts = vec![vec![0usize; t.max_entry() + 2]; ncols + 2];
    for (c, e) in t.iter() {
        counts[c.col][e] += 1;
    }
    counts
}

/// True iff the filling satisfies the row and column conditions of `kind`
/// (without the lattice condition).
pub fn is_semistandard(t: &SkewTableau, kind: TableauKind) -> bool {
    rows_ordered(t, kind) && columns_ordered(t, kind)
}

fn lattice_lr(t: &SkewTableau) -> bool {
    let s = t.max_entry();
    let counts = column_counts(t);
    let mut suffix = vec![0usize; s + 2];
    for c in (1..=t.shape.beta.len()).rev() {
        for l in 1..=s {
            suffix[l] += counts[c][l];
        }
        if (1..s).any(|l| suffix[l + 1] > suffix[l]) {
            return false;
        }
    }
    true
}

fn lattice_socle(t: &SkewTableau) -> bool {
    let s = t.max_entry();
    let counts = column_counts(t);
    let mut prefix = vec![0usize; s + 2];
    for col in &counts[1..=t.shape.beta.len()] {
        for (acc, &n) in prefix.iter_mut().zip(col).take(s + 1).skip(1) {
            *acc += n;
        }
        if (1..s).any(|l| prefix[l + 1] > prefix[l]) {
            return false;
        }
    }
    true
}

/// LR axioms: rows weakly increasing, columns strictly increasing, and for
/// every vertical line at most as many `l+1` as `l` to its right.
pub fn check_lr(t: &SkewTableau) -> bool {
    is_semistandard(t, TableauKind::Lr) && lattice_lr(t)
}

/// Socle axioms: rows weakly decreasing, columns strictly decreasing, and for
/// every vertical line at most as many `l+1` as `l` to its left.
pub fn check_socle(t: &SkewTableau) -> bool {
    is_semistandard(t, TableauKind::Socle) && lattice_socle(t)
}

pub fn check(t: &SkewTableau, kind: TableauKind) -> bool {
    match kind {
        TableauKind::Lr => check_lr(t),
        TableauKind::Socle => check_socle(t),
    }
}

/// Row form of the socle lattice condition: for every row `r` and level `l`,
/// the entries `l+1` in row `r` and below are at most as many as the entries
/// `l` strictly below row `r`.
pub fn check_row_lattice(t: &SkewTableau) -> bool {
    let s = t.max_entry();
    let rows = t.shape.beta.first();
    let mu = t.multiplicities();
    // at_or_below[l] after processing row r counts entries l in rows >= r
    let mut at_or_below = vec![0usize; s + 2];
    for r in (1..=rows).rev() {
        let strictly_below = at_or_below.clone();
        for l in 1..=s {
            at_or_below[l] += mu[l][r];
        }
        if (1..s).any(|l| at_or_below[l + 1] > strictly_below[l]) {
            return false;
        }
    }
    true
}

/// An injective assignment of the cells holding `level + 1` to cells holding
/// `level`, staying in the same column when that column holds a `level`, and
/// moving strictly left otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryMatching {
    pub level: usize,
    /// Pairs `(cell with level+1, cell with level)`, ordered by decreasing
    /// column of the first cell.
    pub pairs: Vec<(Cell, Cell)>,
}

impl EntryMatching {
    pub fn target(&self, source: Cell) -> Option<Cell> {
        self.pairs.iter().find(|p| p.0 == source).map(|p| p.1)
    }

    /// Checks injectivity and the column rule against `t`.
    pub fn is_valid_for(&self, t: &SkewTableau) -> bool {
        let l = self.level;
        let sources: Vec<Cell> = t.iter().filter(|&(_, e)| e == l + 1).map(|(c, _)| c).collect();
        if sources.len() != self.pairs.len() {
            return false;
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(b, b2) in &self.pairs {
            if t.entry(b) != Some(l + 1) || t.entry(b2) != Some(l) || !seen.insert(b2) {
                return false;
            }
            let column_has_l = t.iter().any(|(c, e)| c.col == b.col && e == l);
            let ok = if column_has_l { b2.col == b.col } else { b2.col < b.col };
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Builds the matching of entries `level+1` into entries `level`.
///
/// Same-column pairs are fixed first; the remaining cells are processed from
/// the rightmost column leftwards and take the unused `level` in the nearest
/// column to their left. Failure means the lattice condition is violated.
pub fn build_matching(t: &SkewTableau, level: usize) -> Result<EntryMatching, TableauError> {
    let of_level = |v: usize| -> Vec<Cell> { t.iter().filter(|&(_, e)| e == v).map(|(c, _)| c).collect() };
    let mut uppers = of_level(level + 1);
    let lowers = of_level(level);
    uppers.sort_by(|a, b| b.col.cmp(&a.col).then(a.row.cmp(&b.row)));
    let mut used = vec![false; lowers.len()];
    let mut target: Vec<Option<Cell>> = vec![None; uppers.len()];
    for (i, b) in uppers.iter().enumerate() {
        if let Some(k) = lowers.iter().enumerate().position(|(k, c)| c.col == b.col && !used[k]) {
            used[k] = true;
            target[i] = Some(lowers[k]);
        }
    }
    for (i, b) in uppers.iter().enumerate() {
        if target[i].is_some() {
            continue;
        }
        let best = lowers
            .iter()
            .enumerate()
            .filter(|&(k, c)| !used[k] && c.col < b.col)
            .max_by_key(|&(_, c)| (c.col, std::cmp::Reverse(c.row)))
            .map(|(k, _)| k);
        match best {
            Some(k) => {
                used[k] = true;
                target[i] = Some(lowers[k]);
            }
            None => return Err(TableauError::MatchingFailed(level)),
        }
    }
    Ok(EntryMatching {
        level,
        pairs: uppers
            .into_iter()
            .zip(target)
            .map(|(b, t)| (b, t.expect("assigned")))
            .collect(),
    })
}

/// True iff [`build_matching`] succeeds for every level.
pub fn matchings_exist(t: &SkewTableau) -> bool {
    (1..t.max_entry()).all(|l| build_matching(t, l).is_ok())
}

/// A tableau viewed as a sequence of partitions.
///
/// Socle view: `chain[0] = beta`, `chain[s] = gamma`, decreasing, the cells
/// of `chain[l-1] \ chain[l]` carry `l`. LR view: `chain[0] = gamma`,
/// `chain[s] = beta`, increasing, the cells of `chain[l] \ chain[l-1]`
/// carry `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionChain {
    pub kind: TableauKind,
    pub chain: Vec<Partition>,
}

pub fn to_chain(t: &SkewTableau, kind: TableauKind) -> Result<PartitionChain, TableauError> {
    if !is_semistandard(t, kind) {
        return Err(TableauError::Invalid(kind.name()));
    }
    let s = t.max_entry();
    let ncols = t.shape.beta.len();
    let chain = (0..=s)
        .map(|i| {
            let cols: Vec<usize> = (1..=ncols)
                .map(|c| {
                    let extra = t
                        .iter()
                        .filter(|&(cell, e)| {
                            cell.col == c
                                && match kind {
                                    TableauKind::Socle => e > i,
                                    TableauKind::Lr => e <= i,
                                }
                        })
                        .count();
                    t.shape.gamma.col(c) + extra
                })
                .collect();
            Partition::new(cols).map_err(|e| TableauError::BadChain(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PartitionChain { kind, chain })
}

pub fn from_chain(chain: &PartitionChain) -> Result<SkewTableau, TableauError> {
    let parts = &chain.chain;
    if parts.is_empty() {
        return Err(TableauError::BadChain("empty chain".into()));
    }
    let s = parts.len() - 1;
    let (beta, gamma) = match chain.kind {
        TableauKind::Socle => (parts[0].clone(), parts[s].clone()),
        TableauKind::Lr => (parts[s].clone(), parts[0].clone()),
    };
    let mut map = BTreeMap::new();
    let mut content = Vec::with_capacity(s);
    for l in 1..=s {
        let (outer, inner) = match chain.kind {
            TableauKind::Socle => (&parts[l - 1], &parts[l]),
            TableauKind::Lr => (&parts[l], &parts[l - 1]),
        };
        if !outer.contains(inner) {
            return Err(TableauError::ChainNotNested(l));
        }
        if !is_horizontal_strip(outer, inner)? {
            return Err(TableauError::NotHorizontalStrip(l));
        }
        let strip = skew_cells(outer, inner)?;
        content.push(strip.len());
        for c in strip {
            map.insert(c, l);
        }
    }
    let alpha = Partition::from_row_lengths(content.clone())
        .ok()
        .filter(|a| a.transpose().parts() == content.as_slice())
        .ok_or_else(|| TableauError::BadChain(format!("strip sizes {content:?} are not a partition")))?;
    let shape = ShapeTriple::new(alpha, beta, gamma)?;
    SkewTableau::from_map(shape, &map)
}

/// Walks every chain of horizontal strips of the given shape. With
/// `lattice = true` only chains satisfying the lattice condition of `kind`
/// are visited. The callback receives the column lengths of each member.
fn walk_chains<F: FnMut(&[Vec<usize>])>(shape: &ShapeTriple, kind: TableauKind, lattice: bool, mut visit: F) {
    let ncols = shape.beta.len();
    let beta: Vec<usize> = (1..=ncols).map(|c| shape.beta.col(c)).collect();
    let gamma: Vec<usize> = (1..=ncols).map(|c| shape.gamma.col(c)).collect();
    let content: Vec<usize> = shape.alpha.transpose().parts().to_vec();
    let start = match kind {
        TableauKind::Socle => beta.clone(),
        TableauKind::Lr => gamma.clone(),
    };
    let mut chain = vec![start];
    let mut strips: Vec<Vec<bool>> = Vec::new();
    descend(
        kind,
        lattice,
        &beta,
        &gamma,
        &content,
        &mut chain,
        &mut strips,
        &mut visit,
    );
}

#[allow(clippy::too_many_arguments)]
fn descend<F: FnMut(&[Vec<usize>])>(
    kind: TableauKind,
    lattice: bool,
    beta: &[usize],
    gamma: &[usize],
    content: &[usize],
    chain: &mut Vec<Vec<usize>>,
    strips: &mut Vec<Vec<bool>>,
    visit: &mut F,
) {
    let level = strips.len();
    if level == content.len() {
        visit(chain);
        return;
    }
    let cur = chain.last().expect("nonempty").clone();
    let size = content[level];
    let mut next = cur.clone();
    let mut picked = vec![false; cur.len()];
    let mut candidates = Vec::new();
    choose_strip(
        kind,
        beta,
        gamma,
        &cur,
        0,
        size,
        &mut next,
        &mut picked,
        &mut candidates,
    );
    for strip in candidates {
        if lattice && level > 0 && !strip_lattice_ok(kind, &strips[level - 1], &strip) {
            continue;
        }
        let next: Vec<usize> = cur
            .iter()
            .zip(&strip)
            .map(|(&v, &b)| match (kind, b) {
                (_, false) => v,
                (TableauKind::Socle, true) => v - 1,
                (TableauKind::Lr, true) => v + 1,
            })
            .collect();
        chain.push(next);
        strips.push(strip);
        descend(kind, lattice, beta, gamma, content, chain, strips, visit);
        strips.pop();
        chain.pop();
    }
}

#[allow(clippy::too_many_arguments)]
fn choose_strip(
    kind: TableauKind,
    beta: &[usize],
    gamma: &[usize],
    cur: &[usize],
    col: usize,
    remaining: usize,
    next: &mut Vec<usize>,
    picked: &mut Vec<bool>,
    out: &mut Vec<Vec<bool>>,
) {
    if col == cur.len() {
        if remaining == 0 {
            out.push(picked.clone());
        }
        return;
    }
    if cur.len() - col < remaining {
        return;
    }
    let left = if col == 0 { usize::MAX } else { next[col - 1] };
    // leave the column alone
    if cur[col] <= left {
        next[col] = cur[col];
        picked[col] = false;
        choose_strip(kind, beta, gamma, cur, col + 1, remaining, next, picked, out);
    }
    if remaining > 0 {
        let moved = match kind {
            TableauKind::Socle if cur[col] > gamma[col] => Some(cur[col] - 1),
            TableauKind::Lr if cur[col] < beta[col] => Some(cur[col] + 1),
            _ => None,
        };
        if let Some(v) = moved {
            // columns must stay weakly decreasing from left to right
            if v <= left {
                next[col] = v;
                picked[col] = true;
                choose_strip(kind, beta, gamma, cur, col + 1, remaining - 1, next, picked, out);
                picked[col] = false;
            }
        }
    }
    next[col] = cur[col];
}

/// Lattice check between consecutive strips: `upper` holds entries `l+1`,
/// `lower` entries `l` (one cell per picked column).
fn strip_lattice_ok(kind: TableauKind, lower: &[bool], upper: &[bool]) -> bool {
    let mut lo = 0usize;
    let mut up = 0usize;
    let step = |lo: &mut usize, up: &mut usize, c: usize| {
        *lo += lower[c] as usize;
        *up += upper[c] as usize;
        *up <= *lo
    };
    match kind {
        TableauKind::Socle => (0..lower.len()).all(|c| step(&mut lo, &mut up, c)),
        TableauKind::Lr => (0..lower.len()).rev().all(|c| step(&mut lo, &mut up, c)),
    }
}

fn chain_to_tableau(shape: &ShapeTriple, kind: TableauKind, chain: &[Vec<usize>]) -> SkewTableau {
    let cells = shape.cells();
    let mut entries = vec![0usize; cells.len()];
    for (l, pair) in chain.windows(2).enumerate() {
        for (c, (&before, &after)) in pair[0].iter().zip(&pair[1]).enumerate() {
            if before != after {
                let row = match kind {
                    TableauKind::Socle => before,
                    TableauKind::Lr => after,
                };
                let idx = cells
                    .binary_search(&Cell::new(row, c + 1))
                    .expect("strip cell lies in the skew diagram");
                entries[idx] = l + 1;
            }
        }
    }
    SkewTableau {
        shape: shape.clone(),
        cells,
        entries,
    }
}

/// All tableaux of the given kind and shape, sorted lexicographically by
/// their row-major entry sequence.
pub fn enumerate(shape: &ShapeTriple, kind: TableauKind) -> Vec<SkewTableau> {
    collect(shape, kind, true)
}

/// All fillings of the shape satisfying the row and column conditions of
/// `kind`, ignoring the lattice condition.
pub fn enumerate_semistandard(shape: &ShapeTriple, kind: TableauKind) -> Vec<SkewTableau> {
    collect(shape, kind, false)
}

fn collect(shape: &ShapeTriple, kind: TableauKind, lattice: bool) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    walk_chains(shape, kind, lattice, |chain| {
        out.push(chain_to_tableau(shape, kind, chain))
    });
    out.sort_by(|a, b| a.entries.cmp(&b.entries));
    out
}

/// Number of tableaux of the given kind and shape.
pub fn count(shape: &ShapeTriple, kind: TableauKind) -> usize {
    let mut n = 0;
    walk_chains(shape, kind, true, |_| n += 1);
    n
}

/// The Littlewood-Richardson coefficient: the number of LR-tableaux of shape
/// `(alpha, beta, gamma)`, zero when the shape is not admissible.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> usize {
    match ShapeTriple::new(alpha.clone(), beta.clone(), gamma.clone()) {
        Ok(shape) => count(&shape, TableauKind::Lr),
        Err(_) => 0,
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn lr_examples() {
        assert!(check_lr(&gamma2_dual()));
        assert!(check_lr(&picket_lr()));
        let swapped = from_cells("31/532/42", &[((1, 3), 2), ((2, 3), 1), ((3, 2), 1), ((5, 1), 3)]);
        assert!(!check_lr(&swapped));
    }

    #[test]
    fn socle_examples() {
        assert!(check_socle(&sigma2()));
        assert!(check_socle(&picket_socle()));
        let broken = from_cells(
            "42/532/31",
            &[
                ((1, 3), 4),
                ((2, 2), 3),
                ((2, 3), 2),
                ((3, 2), 1),
                ((4, 1), 1),
                ((5, 1), 2),
            ],
        );
        assert!(!check_socle(&broken));
        assert!(!check_lr(&sigma2()));
    }

    #[test]
    fn row_lattice_examples() {
        let t = sigma2();
        assert!(check_row_lattice(&t));
        // l = 1, r = 2: two entries 2 in rows >= 2 against two entries 1 below row 2
        let mu = t.multiplicities();
        let twos: usize = (2..=5).map(|r| mu[2][r]).sum();
        let ones: usize = (3..=5).map(|r| mu[1][r]).sum();
        assert_eq!((twos, ones), (2, 2));
        assert!(check_row_lattice(&SkewTableau::empty("532".parse().unwrap())));
        assert!(check_row_lattice(&picket_socle()));
    }

    #[test]
    fn lattice_failure_is_detected_by_all_forms() {
        let ok = from_cells("2/2/", &[((1, 1), 2), ((2, 1), 1)]);
        assert!(check_socle(&ok) && check_row_lattice(&ok));
        // row 1 reads 2,1: rows and columns are fine, the lattice condition is not
        let t = from_cells("2/11/", &[((1, 1), 2), ((1, 2), 1)]);
        assert!(is_semistandard(&t, TableauKind::Socle));
        assert!(!check_socle(&t));
        assert!(!check_row_lattice(&t));
    }

    #[test]
    fn matching_examples() {
        let t = sigma2();
        let m1 = build_matching(&t, 1).unwrap();
        assert_eq!(
            m1.pairs,
            vec![(Cell::new(2, 3), Cell::new(3, 2)), (Cell::new(4, 1), Cell::new(5, 1))]
        );
        assert!(m1.is_valid_for(&t));
        let m3 = build_matching(&t, 3).unwrap();
        assert_eq!(m3.pairs, vec![(Cell::new(1, 3), Cell::new(2, 2))]);
        let m9 = build_matching(&t, 9).unwrap();
        assert!(m9.pairs.is_empty());
    }

    #[test]
    fn matching_fails_on_lattice_violation() {
        let t = from_cells("2/11/", &[((1, 1), 2), ((1, 2), 1)]);
        assert_eq!(build_matching(&t, 1), Err(TableauError::MatchingFailed(1)));
    }

    #[test]
    fn chain_examples() {
        let chain = to_chain(&sigma2(), TableauKind::Socle).unwrap();
        let want: Vec<Partition> = ["532", "422", "321", "311", "31"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(chain.chain, want);
        assert_eq!(from_chain(&chain).unwrap(), sigma2());

        let picket = to_chain(&picket_socle(), TableauKind::Socle).unwrap();
        let want: Vec<Partition> = (1..=5).rev().map(|m| Partition::new(vec![m]).unwrap()).collect();
        assert_eq!(picket.chain, want);

        let trivial = PartitionChain {
            kind: TableauKind::Socle,
            chain: vec!["21".parse().unwrap()],
        };
        assert!(from_chain(&trivial).unwrap().is_empty());
    }

    #[test]
    fn chain_errors() {
        let bad = PartitionChain {
            kind: TableauKind::Socle,
            chain: vec!["2".parse().unwrap(), "3".parse().unwrap()],
        };
        assert_eq!(from_chain(&bad), Err(TableauError::ChainNotNested(1)));
        let wide = PartitionChain {
            kind: TableauKind::Socle,
            chain: vec!["3".parse().unwrap(), "1".parse().unwrap()],
        };
        assert_eq!(from_chain(&wide), Err(TableauError::NotHorizontalStrip(1)));
    }

    #[test]
    fn enumeration_counts() {
        let socle = enumerate(&shape("42/532/31"), TableauKind::Socle);
        assert_eq!(socle.len(), 2);
        assert!(socle.contains(&sigma2()));
        assert_eq!(enumerate(&shape("42/532/31"), TableauKind::Lr).len(), 2);
        assert_eq!(enumerate(&shape("42/642/42"), TableauKind::Lr).len(), 3);
        assert_eq!(enumerate(&shape("42/642/42"), TableauKind::Socle).len(), 3);
        for m in 1..=6 {
            for l in 0..=m {
                let s = ShapeTriple::new(
                    Partition::new(vec![l]).unwrap(),
                    Partition::new(vec![m]).unwrap(),
                    Partition::new(vec![m - l]).unwrap(),
                )
                .unwrap();
                assert_eq!(count(&s, TableauKind::Socle), 1);
                assert_eq!(count(&s, TableauKind::Lr), 1);
            }
        }
    }

    #[test]
    fn lr_coefficients() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(lr_coefficient(&p("42"), &p("532"), &p("31")), 2);
        assert_eq!(lr_coefficient(&p("42"), &p("642"), &p("42")), 3);
        assert_eq!(lr_coefficient(&p("4"), &p("532"), &p("31")), 0);
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2")), 0);
        // c^{21}_{1,1} = 1 in either convention, c^{(2,1)+...}
        assert_eq!(lr_coefficient(&p("1"), &p("21"), &p("2")), 1);
        assert_eq!(lr_coefficient(&p("21"), &p("321"), &p("21")), 2);
    }

    #[test]
    fn grid_json_roundtrip() {
        let t = sigma2();
        let json = t.to_json();
        assert_eq!(
            json,
            r#"{"alpha":[4,2],"beta":[5,3,2],"gamma":[3,1],"grid":[[0,0,4],[0,3,2],[0,1],[2],[1]]}"#
        );
        assert_eq!(SkewTableau::from_json(&json).unwrap(), t);
        assert_eq!(SkewTableau::from_json(&json).unwrap().to_json(), json);
        assert!(SkewTableau::from_json(r#"{"alpha":[1],"beta":[1],"gamma":[],"grid":[[0]]}"#).is_err());
        assert!(SkewTableau::from_json(r#"{"alpha":[1],"beta":[1],"gamma":[],"grid":[]}"#).is_err());
    }

    #[test]
    fn text_rendering() {
        assert_eq!(sigma2().render_text(), "..4\n.32\n.1\n2\n1\n");
    }

    #[test]
    fn well_formedness_errors() {
        let s = shape("42/532/31");
        assert!(matches!(
            SkewTableau::new(s.clone(), vec![1; 5]),
            Err(TableauError::EntryCount { .. })
        ));
        assert!(matches!(
            SkewTableau::new(s.clone(), vec![5, 1, 1, 2, 2, 3]),
            Err(TableauError::EntryOutOfRange { .. })
        ));
        assert!(matches!(
            SkewTableau::new(s, vec![1, 1, 1, 2, 2, 3]),
            Err(TableauError::Content { .. })
        ));
    }
}
