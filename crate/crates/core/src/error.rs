use thiserror::Error;

use crate::partition::{Cell, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("({inner}) is not contained in ({outer})")]
    NotContained { outer: Partition, inner: Partition },
    #[error("weights do not add up: |alpha| = {alpha}, |beta| = {beta}, |gamma| = {gamma}")]
    WeightMismatch { alpha: usize, beta: usize, gamma: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("entry {entry} at {cell} is out of range 1..={max}")]
    EntryOutOfRange { cell: Cell, entry: usize, max: usize },
    #[error("content does not match alpha: entry {entry} occurs {got} times, expected {expected}")]
    Content { entry: usize, expected: usize, got: usize },
    #[error("partition chain is not nested at step {0}")]
    ChainNotNested(usize),
    #[error("step {0} of the partition chain is not a horizontal strip")]
    NotHorizontalStrip(usize),
    #[error("invalid partition chain: {0}")]
    BadChain(String),
    #[error("tableau is not a valid {0} tableau")]
    Invalid(&'static str),
    #[error("no matching for level {0}: the lattice condition fails")]
    MatchingFailed(usize),
    #[error("malformed grid: {0}")]
    Grid(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u32, u32),
    #[error("{0} is not a supported prime")]
    BadPrime(u32),
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("module is not in standard Jordan form")]
    NotStandard,
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error("condition (*) violated at step {0}")]
    ConditionStarViolated(usize),
    #[error("internal construction error: {0}")]
    Internal(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConvertError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("inconsistent hom-matrix: {0}")]
    InconsistentMatrix(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SwitchError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("terminal T-region has shape ({got}), expected ({expected})")]
    ShapeMismatch { expected: Partition, got: Partition },
    #[error("switching did not terminate within {0} swaps")]
    NonTerminating(usize),
}
