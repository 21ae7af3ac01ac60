#![allow(dead_code)]

use algframe_core::dlat::FinDLat;
use algframe_core::order::{enumerate_posets, Poset};
use algframe_core::Limits;

pub fn posets(max: usize) -> Vec<Poset> {
    let limits = Limits::default();
    (0..=max)
        .flat_map(|n| enumerate_posets(n, &limits).unwrap())
        .collect()
}

/// Upset lattices of every poset with at most `max` points.
pub fn corpus(max: usize) -> Vec<FinDLat> {
    posets(max)
        .iter()
        .map(|p| FinDLat::birkhoff(p).unwrap())
        .collect()
}
