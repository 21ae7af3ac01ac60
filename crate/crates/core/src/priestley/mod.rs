//! Finite Priestley spaces read as L-spaces.
//!
//! A finite Priestley space is a finite poset with the discrete topology, so
//! its clopen upsets are just its upsets. The operators are still written
//! against the definitions (closures, density, quantification over open
//! upsets) with the topology routed through [`FinPriestley::closure`].

mod maps;
mod points;
mod predicates;
mod space;

pub use maps::{MapFlags, MapPredicate, SpaceMap};
pub use points::{PointSpace, PointSpacePredicate, SpatialPart};
pub use predicates::LSpacePredicate;
pub use space::{FinPriestley, OperatorTable};
