//! Exact arithmetic for skew Schur Q-functions of shifted skew shapes.
//!
//! This crate provides the algorithmic core:
//!
//! - [`StrictPartition`] and [`ShiftedSkewShape`]: strict partitions and
//!   shifted skew diagrams, with classification into ribbons, near-ribbons,
//!   and frayed ribbons ([`shape`]).
//! - [`tableau`]: shifted semistandard Young tableaux over the doubled
//!   alphabet `1' < 1 < 2' < 2 < ...`, reading words, greedy fillings, and
//!   backtracking enumeration of fillings.
//! - [`walk`]: the first-quadrant lattice-walk semantics of words and the
//!   ballotness test.
//! - [`expansion`]: shifted Littlewood-Richardson coefficients by counting
//!   ballot tableaux, full Schur-Q expansions, monomial series, differences,
//!   and products, all over checked 64-bit integers.
//! - [`closedform`]: explicit coefficient formulas for frayed ribbons with
//!   few turns, usable as independent oracles against the generic engine.
//!
//! Everything is a pure function over immutable values; the crate is
//! `no_std` (with `alloc`) and leaves IO, persistence, and parallel
//! orchestration to the companion `qfray` crate.

#![no_std]

extern crate alloc;

pub mod closedform;
pub mod error;
pub mod expansion;
pub mod partition;
pub mod shape;
pub mod tableau;
pub mod walk;

pub use error::Error;
pub use expansion::{MonomialSeries, QExpansion};
pub use partition::StrictPartition;
pub use shape::{
    Cell, FrayedRibbonCode, Orientation, ShapeClass, ShapeKind, ShiftedSkewShape, TurnReport,
    TwoTurnParams,
};
pub use tableau::{ContentVector, GreedyResult, Letter, ShiftedTableau};
pub use walk::{WalkState, WalkTrace};
