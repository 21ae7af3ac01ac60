//! Symbolic complete chains built from blocks.
//!
//! A chain frame is a word over three block types, with an implicit bottom
//! before the first block and an implicit top after the last:
//!
//! - `Fin(k)`: `k` consecutive points,
//! - `Omega`: a copy of `ω`,
//! - `Dense`: a dense interval, addressed by rationals in `(0, 1)`.
//!
//! The supremum of an `Omega` or `Dense` block is the first point of the
//! next block when that block is `Fin` or `Omega`, the global top after the
//! last block, and a separate element [`ChainElt::BlockSup`] when the next
//! block is `Dense`. Every complete chain is a frame, and the predicates
//! here are closed forms over the block structure.

mod elt;
mod fixtures;
mod frame;
mod oracle;
mod predicates;

pub use elt::{ChainElt, Coord};
pub use fixtures::{Fixture, SEPARATING_CHAINS};
pub use frame::{Block, ChainFrame};
pub use predicates::ChainPredicate;
