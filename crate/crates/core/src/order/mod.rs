//! Finite posets and their up/down-set calculus.
//!
//! Points are `usize` indices below 64 and subsets of points are `u64`
//! masks; [`PointSet`] wraps a mask together with the identity of the poset
//! it was taken from.

mod bits;
mod canon;
mod closure;
mod maps;
mod pointset;
mod poset;

pub use bits::{cmp_canonical, full_mask, ones, Ones};
pub use canon::{enumerate_posets, CanonicalForm};
pub use closure::closed_sets;
pub use maps::{for_each_monotone_image, monotone_maps, MonotoneMap};
pub(crate) use maps::preimage;
pub use pointset::PointSet;
pub use poset::{Poset, PosetId, MAX_POINTS};
