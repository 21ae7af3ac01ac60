//! The functors between finite lattices and finite Priestley spaces.
//!
//! A lattice goes to its space of prime filters ordered by inclusion, with
//! the Stone map `φ(a) = {x : a ∈ x}`; a space goes to its lattice of clopen
//! upsets. Frame homomorphisms dualize to preimage maps. The validators
//! check each characterization theorem on a lattice and its dual.

mod hom;
mod record;
mod validate;

pub use hom::dualize_hom;
pub use record::{
    clop_up_lattice, match_records, phi_join_law, priestley_space_of, priestley_space_of_with,
    priestley_space_oracle,
    round_trip_frame, round_trip_space, IsoReport, StoneMapRecord,
};
pub use validate::{validate, LatticeDual, Outcome, Side, Theorem};
