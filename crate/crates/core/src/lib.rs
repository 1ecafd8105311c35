//! Socle tableaux and Littlewood-Richardson tableaux of submodule embeddings.
//!
//! An embedding `(A ⊂ B)` of finite-length modules over a discrete valuation
//! ring carries two tableau invariants: the LR-tableau, read off the radical
//! series of `A`, and the socle tableau, read off the socle series of `A`.
//! This crate validates and enumerates both kinds of tableaux, realizes every
//! socle tableau by an explicit embedding over `F_p[T]/(T^N)`, converts
//! between the socle tableau, the LR-tableau of the dual embedding and the
//! Hom-matrix, and checks the tableau switching correspondence.

pub mod convert;
pub mod dvrmod;
pub mod embedding;
pub mod error;
pub mod fp;
pub mod partition;
pub mod realize;
pub mod switching;
pub mod tableau;

pub use convert::HomMatrix;
pub use dvrmod::{FpModule, Subspace};
pub use embedding::Embedding;
pub use error::{ConvertError, ModuleError, RealizeError, ShapeError, SwitchError, TableauError};
pub use fp::Matrix;
pub use partition::{Cell, Partition, ShapeTriple};
pub use realize::EpiChain;
pub use switching::{ConjectureReport, SwitchOrder, SwitchState};
pub use tableau::{PartitionChain, SkewTableau, TableauKind};
