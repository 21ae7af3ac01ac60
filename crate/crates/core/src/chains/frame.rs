use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::dlat::FinDLat;
use crate::order::Poset;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Block {
    /// `k >= 1` consecutive points.
    Fin(u64),
    Omega,
    Dense,
}

impl Block {
    /// Whether the block has a supremum that it does not contain.
    pub fn is_open_ended(self) -> bool {
        !matches!(self, Block::Fin(_))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Fin(k) => write!(f, "fin:{k}"),
            Block::Omega => f.write_str("omega"),
            Block::Dense => f.write_str("dense"),
        }
    }
}

impl FromStr for Block {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "omega" => Ok(Block::Omega),
            "dense" => Ok(Block::Dense),
            t => {
                let k = t
                    .strip_prefix("fin:")
                    .and_then(|k| k.parse::<u64>().ok())
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| Error::ChainSyntax(t.to_string()))?;
                Ok(Block::Fin(k))
            }
        }
    }
}

/// A complete chain described by its block word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainFrame {
    blocks: Vec<Block>,
    /// The one-element chain, where bottom and top coincide.
    degenerate: bool,
}

impl ChainFrame {
    /// Normalizes the word: adjacent `Fin` blocks are added up and adjacent
    /// `Dense` blocks merged. The empty word is the two-element chain.
    pub fn new(word: &[Block]) -> Result<Self> {
        let mut blocks: Vec<Block> = Vec::with_capacity(word.len());
        for &b in word {
            if b == Block::Fin(0) {
                return Err(Error::ChainSyntax("fin:0".into()));
            }
            match (blocks.last_mut(), b) {
                (Some(Block::Fin(k)), Block::Fin(j)) => {
                    *k = k
                        .checked_add(j)
                        .ok_or(Error::ChainSyntax("finite block too long".into()))?
                }
                (Some(Block::Dense), Block::Dense) => {}
                _ => blocks.push(b),
            }
        }
        Ok(ChainFrame {
            blocks,
            degenerate: false,
        })
    }

    /// The one-element chain.
    pub fn point() -> Self {
        ChainFrame {
            blocks: Vec::new(),
            degenerate: true,
        }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// Number of elements, if finite.
    pub fn finite_size(&self) -> Option<u64> {
        if self.degenerate {
            return Some(1);
        }
        self.blocks.iter().try_fold(2u64, |n, b| match b {
            Block::Fin(k) => n.checked_add(*k),
            _ => None,
        })
    }

    /// Materializes a chain without `Omega` or `Dense` blocks as a lattice.
    pub fn to_lattice(&self) -> Result<FinDLat> {
        let n = self
            .finite_size()
            .ok_or(Error::Normalization("chain is infinite"))?;
        if n > crate::order::MAX_POINTS as u64 {
            return Err(Error::Capacity {
                what: "lattice elements",
                needed: n as u128,
                limit: crate::order::MAX_POINTS as u128,
            });
        }
        let p = Poset::chain(n as usize);
        FinDLat::from_order(p, None)
    }

    pub fn spec(&self) -> String {
        if self.degenerate {
            return "point".into();
        }
        if self.blocks.is_empty() {
            return "empty".into();
        }
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        parts.join("+")
    }
}

impl fmt::Display for ChainFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

impl FromStr for ChainFrame {
    type Err = Error;

    /// `fin:3+omega+dense`; `empty` (or nothing) is the two-element chain
    /// and `point` the one-element chain.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "" | "empty" => ChainFrame::new(&[]),
            "point" => Ok(ChainFrame::point()),
            t => {
                let word = t
                    .split('+')
                    .map(str::parse)
                    .collect::<Result<Vec<Block>>>()?;
                ChainFrame::new(&word)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_normalize() {
        let c: ChainFrame = "fin:2+fin:1+omega+dense+dense".parse().unwrap();
        assert_eq!(c.blocks(), [Block::Fin(3), Block::Omega, Block::Dense]);
        assert_eq!(c.spec(), "fin:3+omega+dense");
        let o: ChainFrame = "omega+omega".parse().unwrap();
        assert_eq!(o.blocks().len(), 2);
        assert!("fin:0".parse::<ChainFrame>().is_err());
        assert!("fin:x".parse::<ChainFrame>().is_err());
        assert!("omega+".parse::<ChainFrame>().is_err());
        assert_eq!("".parse::<ChainFrame>().unwrap().finite_size(), Some(2));
        assert_eq!("point".parse::<ChainFrame>().unwrap().finite_size(), Some(1));
    }

    #[test]
    fn materialize() {
        let c: ChainFrame = "fin:3".parse().unwrap();
        assert_eq!(c.to_lattice().unwrap().size(), 5);
        assert!("omega".parse::<ChainFrame>().unwrap().to_lattice().is_err());
    }
}
