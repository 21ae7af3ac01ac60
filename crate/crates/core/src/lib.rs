//! Finite order theory for algebraic frames and their Priestley duals.
//!
//! The crate is organised bottom-up:
//!
//! - [`order`]: finite posets, bitset point sets, up/down-set calculus,
//!   monotone maps, canonical forms and enumeration up to isomorphism.
//! - [`dlat`]: finite bounded distributive lattices (finite frames) with the
//!   way-below, pseudocomplement and well-inside calculus, frame predicates
//!   and homomorphism predicates.
//! - [`priestley`]: finite Priestley spaces read as L-spaces, with kernel,
//!   core, regular part and center operators, L-space predicates, L-morphism
//!   predicates and predicates on the space of points.
//! - [`chains`]: symbolic complete chains built from finite, `ω`-type and
//!   dense blocks, the infinite frames that separate the frame classes.
//! - [`duality`]: the functors between finite lattices and finite spaces,
//!   round trips, dualization of homomorphisms and one validator per
//!   characterization theorem.
//!
//! Everything here is `no_std` with `alloc`. IO, file formats and the CLI
//! live in the `algframe` crate.
#![no_std]

extern crate alloc;

pub mod chains;
pub mod dlat;
pub mod duality;
pub mod error;
pub mod limits;
pub mod order;
pub mod priestley;
mod verdict;

pub use error::{Error, Result};
pub use limits::Limits;
pub use verdict::{Verdict, Witness};
