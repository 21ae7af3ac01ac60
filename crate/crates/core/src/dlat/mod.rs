//! Finite bounded distributive lattices read as finite frames.
//!
//! On a finite carrier every bounded distributive lattice is a frame, every
//! element is compact and `≪` collapses to `≤`. None of that is assumed
//! here: the definitional operations quantify over ideals and filters, and
//! the collapses are checked by the test suites.

mod hom;
mod lattice;
mod ops;
mod predicates;

pub use hom::{enumerate_homs, HomFlags, HomPredicate, LatticeHom};
pub use lattice::FinDLat;
pub use ops::OracleProfile;
pub use predicates::FramePredicate;
