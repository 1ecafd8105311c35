//! Tableau switching of the superstandard filling of `γ` through a relabeled
//! socle tableau, and an exhaustive check that it reproduces the dual
//! LR-tableau.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::convert::socle_to_duallr;
use crate::error::{SwitchError, TableauError};
use crate::partition::{shapes_up_to, Cell, Partition, ShapeTriple};
use crate::tableau::{check_socle, enumerate, SkewTableau, TableauKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Owner {
    S,
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Swap {
    /// Cell of the `S` entry before the swap.
    pub s_cell: Cell,
    /// Cell of the `T` entry before the swap (right of or below `s_cell`).
    pub t_cell: Cell,
    pub s_entry: usize,
    pub t_entry: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchState {
    beta: Partition,
    cells: BTreeMap<Cell, (Owner, usize)>,
    history: Vec<Swap>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwitchOrder {
    Deterministic,
    Seeded(u64),
}

impl SwitchState {
    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn history(&self) -> &[Swap] {
        &self.history
    }

    pub fn get(&self, cell: Cell) -> Option<(Owner, usize)> {
        self.cells.get(&cell).copied()
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, Owner, usize)> + '_ {
        self.cells.iter().map(|(&c, &(o, e))| (c, o, e))
    }

    /// Whether `value` may sit at `cell` among the other cells of `owner`.
    fn fits(&self, owner: Owner, cell: Cell, value: usize) -> bool {
        self.cells.iter().all(|(&c, &(o, e))| {
            if o != owner || c == cell {
                return true;
            }
            if c.row == cell.row {
                (c.col < cell.col && e <= value) || (c.col > cell.col && e >= value)
            } else if c.col == cell.col {
                (c.row < cell.row && e < value) || (c.row > cell.row && e > value)
            } else {
                true
            }
        })
    }

    fn is_admissible(&self, s_cell: Cell, t_cell: Cell) -> bool {
        let (Some((Owner::S, a)), Some((Owner::T, b))) = (self.get(s_cell), self.get(t_cell)) else {
            return false;
        };
        let adjacent = (t_cell.row == s_cell.row && t_cell.col == s_cell.col + 1)
            || (t_cell.col == s_cell.col && t_cell.row == s_cell.row + 1);
        if !adjacent {
            return false;
        }
        let mut trial = self.clone();
        trial.cells.insert(s_cell, (Owner::T, b));
        trial.cells.insert(t_cell, (Owner::S, a));
        trial.fits(Owner::S, t_cell, a) && trial.fits(Owner::T, s_cell, b)
    }

    /// All admissible swaps, in row-major order of the `S` cell (right before below).
    pub fn admissible_swaps(&self) -> Vec<(Cell, Cell)> {
        let mut out = Vec::new();
        for (&c, &(o, _)) in &self.cells {
            if o != Owner::S {
                continue;
            }
            for n in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
                if self.is_admissible(c, n) {
                    out.push((c, n));
                }
            }
        }
        out
    }

    pub fn is_terminal(&self) -> bool {
        self.admissible_swaps().is_empty()
    }

    fn apply(&mut self, s_cell: Cell, t_cell: Cell) {
        let (_, a) = self.cells[&s_cell];
        let (_, b) = self.cells[&t_cell];
        self.cells.insert(s_cell, (Owner::T, b));
        self.cells.insert(t_cell, (Owner::S, a));
        self.history.push(Swap {
            s_cell,
            t_cell,
            s_entry: a,
            t_entry: b,
        });
    }

    fn guard(&self) -> usize {
        let n = self.beta.weight();
        let s = self
            .cells
            .values()
            .filter(|&&(o, _)| o == Owner::T)
            .map(|&(_, e)| e)
            .max()
            .unwrap_or(0);
        n * n * s.max(1)
    }

    /// Cells owned by `owner`.
    pub fn region(&self, owner: Owner) -> Vec<Cell> {
        self.cells
            .iter()
            .filter(|(_, &(o, _))| o == owner)
            .map(|(&c, _)| c)
            .collect()
    }

    /// Grid over `β` with owner tags, one row per row of `β`.
    pub fn to_grid(&self) -> Vec<Vec<(Owner, usize)>> {
        (1..=self.beta.first())
            .map(|r| (1..=self.beta.row(r)).map(|c| self.cells[&Cell::new(r, c)]).collect())
            .collect()
    }

    pub fn grid_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.to_grid()
                .into_iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.into_iter()
                            .map(|(o, e)| serde_json::json!({"owner": o, "entry": e}))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    /// Text rendering: `S` entries in brackets, `T` entries plain.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for row in self.to_grid() {
            for (o, e) in row {
                match o {
                    Owner::S => out.push_str(&format!("[{e}]")),
                    Owner::T => out.push_str(&format!(" {e} ")),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// `S` = row `i` of `γ` filled with `i`; `T` = `Σ` relabeled `i ↦ s+1−i`, `s = α₁`.
pub fn init_switch(sigma: &SkewTableau) -> Result<SwitchState, SwitchError> {
    if !check_socle(sigma) {
        return Err(TableauError::Invalid("socle").into());
    }
    let shape = sigma.shape();
    let s = shape.alpha.first();
    let mut cells = BTreeMap::new();
    for r in 1..=shape.gamma.first() {
        for c in 1..=shape.gamma.row(r) {
            cells.insert(Cell::new(r, c), (Owner::S, r));
        }
    }
    for (c, e) in sigma.iter() {
        cells.insert(c, (Owner::T, s + 1 - e));
    }
    Ok(SwitchState {
        beta: shape.beta.clone(),
        cells,
        history: Vec::new(),
    })
}

/// Best move of the `T` entry at `t`: towards the larger of its `S`
/// neighbours above and to the left (the one above on ties).
fn slide_step(st: &SwitchState, t: Cell) -> Option<Cell> {
    let mut options: Vec<(usize, bool, Cell)> = Vec::new();
    if t.row > 1 {
        let up = Cell::new(t.row - 1, t.col);
        if st.is_admissible(up, t) {
            options.push((st.cells[&up].1, true, up));
        }
    }
    if t.col > 1 {
        let left = Cell::new(t.row, t.col - 1);
        if st.is_admissible(left, t) {
            options.push((st.cells[&left].1, false, left));
        }
    }
    options.iter().max().map(|&(_, _, s)| s)
}

fn push_swap(st: &mut SwitchState, s: Cell, t: Cell, guard: usize) -> Result<(), SwitchError> {
    if st.history.len() >= guard {
        return Err(SwitchError::NonTerminating(guard));
    }
    st.apply(s, t);
    Ok(())
}

/// Switches until no admissible swap remains. The deterministic order takes
/// the `T` entries by (value, row, column) and slides each as far as it
/// goes, repeating until a full pass moves nothing.
pub fn run_switch(mut st: SwitchState, order: SwitchOrder) -> Result<SwitchState, SwitchError> {
    let guard = st.guard();
    match order {
        SwitchOrder::Deterministic => loop {
            let mut ts: Vec<(usize, Cell)> = st
                .cells
                .iter()
                .filter(|(_, &(o, _))| o == Owner::T)
                .map(|(&c, &(_, e))| (e, c))
                .collect();
            ts.sort();
            let before = st.history.len();
            for (_, mut t) in ts {
                while let Some(s) = slide_step(&st, t) {
                    push_swap(&mut st, s, t, guard)?;
                    t = s;
                }
            }
            if st.history.len() == before {
                return Ok(st);
            }
        },
        SwitchOrder::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            while let Some(&(s, t)) = st.admissible_swaps().choose(&mut rng) {
                push_swap(&mut st, s, t, guard)?;
            }
            Ok(st)
        }
    }
}

/// Reads off the terminal state: the `T` cells must form `α`, and the `S`
/// entries on `β ∖ α` form an LR-tableau of shape `(γ, β, α)`.
pub fn terminal_tableau(st: &SwitchState, shape: &ShapeTriple) -> Result<SkewTableau, SwitchError> {
    let t_cells = st.region(Owner::T);
    let ncols = st.beta.len();
    let cols: Vec<usize> = (1..=ncols)
        .map(|c| t_cells.iter().filter(|x| x.col == c).count())
        .collect();
    let is_diagram = t_cells.iter().all(|x| x.row <= cols[x.col - 1]);
    let got = Partition::new(cols.clone()).ok().filter(|_| is_diagram);
    match got {
        Some(p) if p == shape.alpha => {}
        _ => {
            let mut parts = cols;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            return Err(SwitchError::ShapeMismatch {
                expected: shape.alpha.clone(),
                got: Partition::new(parts).unwrap_or_else(|_| Partition::empty()),
            });
        }
    }
    let dual =
        ShapeTriple::new(shape.gamma.clone(), shape.beta.clone(), shape.alpha.clone()).map_err(TableauError::from)?;
    let map: BTreeMap<Cell, usize> = st
        .cells()
        .filter(|&(_, o, _)| o == Owner::S)
        .map(|(c, _, e)| (c, e))
        .collect();
    Ok(SkewTableau::from_map(dual, &map)?)
}

pub fn switch_to_duallr(sigma: &SkewTableau) -> Result<SkewTableau, SwitchError> {
    switch_with_order(sigma, SwitchOrder::Deterministic).map(|(t, _)| t)
}

/// Runs switching under `order`, returning the terminal tableau and the final state.
pub fn switch_with_order(sigma: &SkewTableau, order: SwitchOrder) -> Result<(SkewTableau, SwitchState), SwitchError> {
    let st = run_switch(init_switch(sigma)?, order)?;
    let t = terminal_tableau(&st, sigma.shape())?;
    Ok((t, st))
}

/// Every state of a run, from the initial filling to the terminal one.
pub fn trace(sigma: &SkewTableau, order: SwitchOrder) -> Result<Vec<SwitchState>, SwitchError> {
    let start = init_switch(sigma)?;
    let end = run_switch(start.clone(), order)?;
    let mut states = vec![start];
    for sw in end.history() {
        let mut next = states.last().expect("nonempty").clone();
        next.apply(sw.s_cell, sw.t_cell);
        states.push(next);
    }
    Ok(states)
}

/// A case where switching disagrees with the duality conversion, with
/// everything needed to replay it.
#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub shape: String,
    pub sigma: Vec<Vec<usize>>,
    /// `None` for the deterministic order, otherwise the RNG seed.
    pub seed: Option<u64>,
    pub expected: Vec<Vec<usize>>,
    /// Terminal tableau, or the error that stopped the run.
    pub got: Result<Vec<Vec<usize>>, String>,
    pub swaps: Vec<Swap>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub max_beta_weight: usize,
    pub seeds: usize,
    pub relabeling: &'static str,
    pub shapes: usize,
    pub tableaux: usize,
    pub runs: usize,
    pub mismatches: Vec<Mismatch>,
    /// Tableaux whose terminal states differ between orders.
    pub order_dependent: usize,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty() && self.order_dependent == 0
    }
}

/// Seed of the `k`-th random order for tableau number `index`.
pub fn run_seed(base: u64, index: usize, k: usize) -> u64 {
    base.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((index as u64) << 16)
        .wrapping_add(k as u64)
}

/// Compares switching (deterministic plus `seeds` random orders) with the
/// duality conversion on every socle tableau with `|β| ≤ max_beta_weight`.
pub fn check_conjecture(max_beta_weight: usize, seeds: usize, base_seed: u64) -> ConjectureReport {
    let mut report = ConjectureReport {
        max_beta_weight,
        seeds,
        relabeling: "i -> alpha_1 + 1 - i",
        shapes: 0,
        tableaux: 0,
        runs: 0,
        mismatches: Vec::new(),
        order_dependent: 0,
    };
    for shape in shapes_up_to(max_beta_weight) {
        let tableaux = enumerate(&shape, TableauKind::Socle);
        if tableaux.is_empty() {
            continue;
        }
        report.shapes += 1;
        for sigma in tableaux {
            let index = report.tableaux;
            report.tableaux += 1;
            let expected = socle_to_duallr(&sigma).expect("valid socle tableau");
            let orders = std::iter::once(SwitchOrder::Deterministic)
                .chain((0..seeds).map(|k| SwitchOrder::Seeded(run_seed(base_seed, index, k))));
            let mut terminals = Vec::new();
            for order in orders {
                report.runs += 1;
                let outcome = init_switch(&sigma).and_then(|st| run_switch(st, order));
                let (got, swaps, terminal) = match outcome {
                    Ok(st) => {
                        let swaps = st.history.clone();
                        let grid = st.to_grid();
                        (terminal_tableau(&st, &shape), swaps, Some(grid))
                    }
                    Err(e) => (Err(e), Vec::new(), None),
                };
                terminals.push(terminal);
                if got.as_ref().ok() != Some(&expected) {
                    report.mismatches.push(Mismatch {
                        shape: shape.to_string(),
                        sigma: sigma.to_grid(),
                        seed: match order {
                            SwitchOrder::Deterministic => None,
                            SwitchOrder::Seeded(s) => Some(s),
                        },
                        expected: expected.to_grid(),
                        got: got.map(|t| t.to_grid()).map_err(|e| e.to_string()),
                        swaps,
                    });
                }
            }
            if terminals.windows(2).any(|w| w[0] != w[1]) {
                report.order_dependent += 1;
            }
        }
    }
    report
}
