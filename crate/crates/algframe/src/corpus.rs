//! Corpus of upset lattices, one per isomorphism class of small posets.

use std::path::Path;

use algframe_core::dlat::FinDLat;
use algframe_core::duality::priestley_space_of;
use algframe_core::order::{enumerate_posets, Poset};
use algframe_core::priestley::FinPriestley;
use algframe_core::Limits;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::formats::{read_json, to_json, LatticeDoc, PosetDoc, SpaceDoc};
use crate::Result;

const FORMAT: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub format: u32,
    pub max_size: usize,
    pub entries: usize,
    /// Entries per poset size `0..=max_size`.
    pub counts: Vec<usize>,
    /// SHA-256 over the entry ids in order.
    pub hash: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    pub poset: PosetDoc,
    pub lattice: LatticeDoc,
    pub space: SpaceDoc,
}

impl Entry {
    pub fn new(p: &Poset, limits: &Limits) -> Result<Self> {
        let canon = p.canonical_form_with(limits)?.to_poset();
        let poset = PosetDoc::from_poset(&canon);
        let lattice = FinDLat::birkhoff_with(&canon, limits)?;
        let space = priestley_space_of(&lattice)?.space;
        Ok(Entry {
            id: poset_id(&poset),
            lattice: LatticeDoc::Birkhoff {
                birkhoff: poset.clone(),
            },
            space: SpaceDoc::from_space(&space),
            poset,
        })
    }

    pub fn lattice(&self) -> Result<FinDLat> {
        self.lattice.to_lattice()
    }

    pub fn space(&self) -> Result<FinPriestley> {
        self.space.to_space()
    }
}

/// First 16 hex digits of the SHA-256 of the compact canonical poset JSON.
pub fn poset_id(doc: &PosetDoc) -> String {
    let bytes = serde_json::to_vec(doc).expect("poset documents serialize");
    hex::encode(&Sha256::digest(&bytes)[..8])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub manifest: Manifest,
    pub entries: Vec<Entry>,
}

impl Corpus {
    pub fn generate(max_size: usize, limits: &Limits) -> Result<Self> {
        let mut entries = Vec::new();
        let mut counts = Vec::with_capacity(max_size + 1);
        for n in 0..=max_size {
            let posets = enumerate_posets(n, limits)?;
            counts.push(posets.len());
            for p in &posets {
                entries.push(Entry::new(p, limits)?);
            }
        }
        let mut h = Sha256::new();
        for e in &entries {
            h.update(e.id.as_bytes());
        }
        Ok(Corpus {
            manifest: Manifest {
                format: FORMAT,
                max_size,
                entries: entries.len(),
                counts,
                hash: hex::encode(h.finalize()),
            },
            entries,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        read_json(path)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let l = Limits::default();
        assert_eq!(Corpus::generate(0, &l).unwrap().entries.len(), 1);
        let c = Corpus::generate(2, &l).unwrap();
        assert_eq!(c.entries.len(), 4);
        assert_eq!(c.manifest.counts, [1, 1, 2]);
    }

    #[test]
    fn ids_ignore_labelling() {
        let l = Limits::default();
        let a = Entry::new(&Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap(), &l).unwrap();
        let b = Entry::new(&Poset::from_covers(3, &[(2, 0), (1, 0)]).unwrap(), &l).unwrap();
        assert_eq!(a.id, b.id);
        assert_eq!(a.id.len(), 16);
        let c = Entry::new(&Poset::from_covers(3, &[(2, 0), (2, 1)]).unwrap(), &l).unwrap();
        assert_ne!(a.id, c.id);
    }

    #[test]
    fn regeneration_is_identical() {
        let l = Limits::default();
        assert_eq!(
            Corpus::generate(3, &l).unwrap().to_json(),
            Corpus::generate(3, &l).unwrap().to_json()
        );
    }
}
