//! JSON documents for posets, lattices, spaces and chains.

use std::fs;
use std::path::Path;

use algframe_core::chains::ChainFrame;
use algframe_core::dlat::FinDLat;
use algframe_core::order::Poset;
use algframe_core::priestley::FinPriestley;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A poset by its cover relation. Covers are sorted in canonical output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub size: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl PosetDoc {
    pub fn from_poset(p: &Poset) -> Self {
        let mut covers: Vec<[usize; 2]> = p.covers().into_iter().map(|(a, b)| [a, b]).collect();
        covers.sort_unstable();
        PosetDoc {
            size: p.size(),
            covers,
            labels: p.labels().map(<[String]>::to_vec),
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let pairs: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        let p = Poset::from_covers(self.size, &pairs)?;
        Ok(match &self.labels {
            Some(l) => p.with_labels(l.clone())?,
            None => p,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeDoc {
    /// The upsets of a poset.
    Birkhoff { birkhoff: PosetDoc },
    /// Elements `0..elements`, ordered by the reflexive-transitive closure
    /// of `leq`.
    Explicit {
        elements: usize,
        leq: Vec<[usize; 2]>,
        bottom: usize,
        top: usize,
    },
}

impl LatticeDoc {
    /// Birkhoff form for distributive lattices, explicit covers otherwise.
    pub fn from_lattice(l: &FinDLat) -> Self {
        if l.is_distributive() {
            let p = match l.birkhoff_source() {
                Some((p, _)) => p.clone(),
                None => l.birkhoff_poset().0,
            };
            return LatticeDoc::Birkhoff {
                birkhoff: PosetDoc::from_poset(&p),
            };
        }
        let doc = PosetDoc::from_poset(l.order());
        LatticeDoc::Explicit {
            elements: doc.size,
            leq: doc.covers,
            bottom: l.bottom(),
            top: l.top(),
        }
    }

    pub fn to_lattice(&self) -> Result<FinDLat> {
        match self {
            LatticeDoc::Birkhoff { birkhoff } => Ok(FinDLat::birkhoff(&birkhoff.to_poset()?)?),
            LatticeDoc::Explicit {
                elements,
                leq,
                bottom,
                top,
            } => {
                let pairs: Vec<(usize, usize)> = leq
                    .iter()
                    .filter(|[a, b]| a != b)
                    .map(|&[a, b]| (a, b))
                    .collect();
                let l = FinDLat::from_order(Poset::from_covers(*elements, &pairs)?, None)?;
                if l.bottom() != *bottom || l.top() != *top {
                    return Err(Error::Usage(format!(
                        "declared bounds ({bottom}, {top}) differ from the order's ({}, {})",
                        l.bottom(),
                        l.top()
                    )));
                }
                Ok(l)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub priestley: PosetDoc,
}

impl SpaceDoc {
    pub fn from_space(x: &FinPriestley) -> Self {
        SpaceDoc {
            priestley: PosetDoc::from_poset(x.points()),
        }
    }

    pub fn to_space(&self) -> Result<FinPriestley> {
        Ok(FinPriestley::new(self.priestley.to_poset()?)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainDoc {
    pub chain: Vec<String>,
}

impl ChainDoc {
    pub fn from_chain(c: &ChainFrame) -> Self {
        ChainDoc {
            chain: if c.is_degenerate() {
                vec!["point".into()]
            } else {
                c.blocks().iter().map(|b| b.to_string()).collect()
            },
        }
    }

    pub fn to_chain(&self) -> Result<ChainFrame> {
        if self.chain.len() == 1 && self.chain[0] == "point" {
            return Ok(ChainFrame::point());
        }
        let word = self
            .chain
            .iter()
            .map(|b| b.parse())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ChainFrame::new(&word)?)
    }
}

/// The output of `dualize`: the space, readable as a [`SpaceDoc`], with
/// the Stone map and the prime filter behind each point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualDoc {
    pub priestley: PosetDoc,
    /// `phi[a]`: points whose filter contains element `a`.
    pub phi: Vec<Vec<usize>>,
    /// `filters[x]`: elements of the prime filter at point `x`.
    pub filters: Vec<Vec<usize>>,
}

pub fn members(mask: u64) -> Vec<usize> {
    algframe_core::order::ones(mask).collect()
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.to_owned(),
        source,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_doc_round_trip() {
        let p = Poset::from_covers(3, &[(1, 2), (0, 2)]).unwrap();
        let doc = PosetDoc::from_poset(&p);
        assert_eq!(doc.covers, [[0, 2], [1, 2]]);
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"size":3,"covers":[[0,2],[1,2]]}"#
        );
        assert_eq!(doc.to_poset().unwrap(), p);
    }

    #[test]
    fn lattice_forms() {
        let b: LatticeDoc = serde_json::from_str(r#"{"birkhoff": {"size": 2, "covers": []}}"#).unwrap();
        let l = b.to_lattice().unwrap();
        assert_eq!(l.size(), 4);
        assert_eq!(LatticeDoc::from_lattice(&l), b);
        // N5 stays explicit
        let n5: LatticeDoc = serde_json::from_str(
            r#"{"elements": 5, "leq": [[0,1],[1,2],[2,4],[0,3],[3,4]], "bottom": 0, "top": 4}"#,
        )
        .unwrap();
        let l = n5.to_lattice().unwrap();
        assert!(!l.is_distributive());
        assert!(matches!(LatticeDoc::from_lattice(&l), LatticeDoc::Explicit { .. }));
        let wrong: LatticeDoc =
            serde_json::from_str(r#"{"elements": 2, "leq": [[0,1]], "bottom": 1, "top": 1}"#).unwrap();
        assert!(wrong.to_lattice().is_err());
    }

    #[test]
    fn chain_doc() {
        let d: ChainDoc = serde_json::from_str(r#"{"chain": ["fin:3", "omega", "dense"]}"#).unwrap();
        let c = d.to_chain().unwrap();
        assert_eq!(c.spec(), "fin:3+omega+dense");
        assert_eq!(ChainDoc::from_chain(&c), d);
        let p = ChainDoc::from_chain(&ChainFrame::point());
        assert!(p.to_chain().unwrap().is_degenerate());
    }
}
