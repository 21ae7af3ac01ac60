use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::{Block, ChainFrame};
use crate::{Error, Result};

/// Position inside a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    /// Index in a `Fin` or `Omega` block.
    Nat(u64),
    /// Point of a `Dense` block, strictly between 0 and 1.
    Rat(Ratio<i64>),
}

/// An element of a [`ChainFrame`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainElt {
    Bottom,
    Top,
    At { block: usize, coord: Coord },
    /// Supremum of an `Omega` or `Dense` block. In normal form it only
    /// appears when the next block is `Dense`.
    BlockSup(usize),
}

impl ChainElt {
    pub fn nat(block: usize, i: u64) -> Self {
        ChainElt::At {
            block,
            coord: Coord::Nat(i),
        }
    }

    /// Dense coordinate `p/q`.
    pub fn rat(block: usize, p: i64, q: i64) -> Self {
        ChainElt::At {
            block,
            coord: Coord::Rat(Ratio::new(p, q)),
        }
    }
}

impl fmt::Display for ChainElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainElt::Bottom => f.write_str("bot"),
            ChainElt::Top => f.write_str("top"),
            ChainElt::At {
                block,
                coord: Coord::Nat(i),
            } => write!(f, "{block}:{i}"),
            ChainElt::At {
                block,
                coord: Coord::Rat(q),
            } => write!(f, "{block}:{}/{}", q.numer(), q.denom()),
            ChainElt::BlockSup(b) => write!(f, "sup:{b}"),
        }
    }
}

impl FromStr for ChainElt {
    type Err = Error;

    /// `bot`, `top`, `sup:B`, `B:N` or `B:P/Q`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ChainSyntax(s.to_string());
        match s.trim() {
            "bot" => Ok(ChainElt::Bottom),
            "top" => Ok(ChainElt::Top),
            t => {
                if let Some(b) = t.strip_prefix("sup:") {
                    return b.parse().map(ChainElt::BlockSup).map_err(|_| bad());
                }
                let (b, c) = t.split_once(':').ok_or_else(bad)?;
                let block = b.parse().map_err(|_| bad())?;
                let coord = match c.split_once('/') {
                    None => Coord::Nat(c.parse().map_err(|_| bad())?),
                    Some((p, q)) => {
                        let p: i64 = p.parse().map_err(|_| bad())?;
                        let q: i64 = q.parse().map_err(|_| bad())?;
                        if q == 0 {
                            return Err(bad());
                        }
                        Coord::Rat(Ratio::new(p, q))
                    }
                };
                Ok(ChainElt::At { block, coord })
            }
        }
    }
}

impl ChainFrame {
    fn block(&self, b: usize) -> Result<Block> {
        self.blocks()
            .get(b)
            .copied()
            .ok_or(Error::Normalization("block index out of range"))
    }

    /// Normal form: block suprema are identified with the next block's first
    /// point or with the top, and coordinates are range-checked.
    pub fn normalize(&self, x: ChainElt) -> Result<ChainElt> {
        if self.is_degenerate() {
            return match x {
                ChainElt::Bottom | ChainElt::Top => Ok(ChainElt::Bottom),
                _ => Err(Error::Normalization("the one-element chain has no blocks")),
            };
        }
        match x {
            ChainElt::Bottom | ChainElt::Top => Ok(x),
            ChainElt::At { block, coord } => {
                match (self.block(block)?, coord) {
                    (Block::Fin(k), Coord::Nat(i)) if i < k => Ok(x),
                    (Block::Omega, Coord::Nat(_)) => Ok(x),
                    (Block::Dense, Coord::Rat(q)) if q > Ratio::zero() && q < Ratio::one() => {
                        Ok(x)
                    }
                    _ => Err(Error::Normalization("coordinate outside its block")),
                }
            }
            ChainElt::BlockSup(b) => {
                if !self.block(b)?.is_open_ended() {
                    return Err(Error::Normalization("finite blocks contain their supremum"));
                }
                match self.blocks().get(b + 1) {
                    None => Ok(ChainElt::Top),
                    Some(Block::Dense) => Ok(x),
                    Some(_) => Ok(ChainElt::nat(b + 1, 0)),
                }
            }
        }
    }

    pub fn is_normal(&self, x: ChainElt) -> bool {
        self.normalize(x) == Ok(x)
    }

    fn check(&self, x: ChainElt) -> Result<ChainElt> {
        if self.is_normal(x) {
            Ok(x)
        } else {
            self.normalize(x)?;
            Err(Error::Normalization("element is not in normal form"))
        }
    }

    fn key(x: ChainElt) -> (u8, usize, u8, Option<Coord>) {
        match x {
            ChainElt::Bottom => (0, 0, 0, None),
            ChainElt::At { block, coord } => (1, block, 0, Some(coord)),
            ChainElt::BlockSup(b) => (1, b, 1, None),
            ChainElt::Top => (2, 0, 0, None),
        }
    }

    /// Total order on normalized elements: by block, then coordinate.
    pub fn cmp(&self, x: ChainElt, y: ChainElt) -> Result<Ordering> {
        let (x, y) = (self.check(x)?, self.check(y)?);
        Ok(Self::key(x).cmp(&Self::key(y)))
    }

    pub fn leq(&self, x: ChainElt, y: ChainElt) -> Result<bool> {
        Ok(self.cmp(x, y)? != Ordering::Greater)
    }

    /// Minimum of a finite list; the empty meet is the top.
    pub fn meet(&self, xs: &[ChainElt]) -> Result<ChainElt> {
        let top = self.normalize(ChainElt::Top)?;
        xs.iter().try_fold(top, |m, &x| {
            Ok(if self.cmp(x, m)? == Ordering::Less { x } else { m })
        })
    }

    /// Maximum of a finite list; the empty join is the bottom.
    pub fn join(&self, xs: &[ChainElt]) -> Result<ChainElt> {
        xs.iter().try_fold(ChainElt::Bottom, |m, &x| {
            Ok(if self.cmp(x, m)? == Ordering::Greater { x } else { m })
        })
    }

    /// Whether `x` is the supremum of the elements strictly below it.
    pub fn is_limit(&self, x: ChainElt) -> Result<bool> {
        let x = self.check(x)?;
        if self.is_degenerate() {
            return Ok(false);
        }
        let after_open_block = |b: usize| b > 0 && self.blocks()[b - 1].is_open_ended();
        Ok(match x {
            ChainElt::Bottom => false,
            ChainElt::At {
                coord: Coord::Rat(_),
                ..
            } => true,
            // the first point of a block after an Omega or Dense block is
            // that block's supremum
            ChainElt::At {
                block,
                coord: Coord::Nat(0),
            } => after_open_block(block),
            ChainElt::At { .. } => false,
            ChainElt::BlockSup(_) => true,
            ChainElt::Top => self
                .blocks()
                .last()
                .is_some_and(|b| b.is_open_ended()),
        })
    }

    pub fn has_predecessor(&self, x: ChainElt) -> Result<bool> {
        let limit = self.is_limit(x)?;
        Ok(!limit && self.check(x)? != ChainElt::Bottom)
    }

    /// The immediate predecessor of a non-limit, non-bottom element.
    pub fn predecessor(&self, x: ChainElt) -> Result<Option<ChainElt>> {
        if !self.has_predecessor(x)? {
            return Ok(None);
        }
        let last_of = |b: usize| -> ChainElt {
            match self.blocks()[b] {
                Block::Fin(k) => ChainElt::nat(b, k - 1),
                _ => unreachable!("elements after open blocks are limits"),
            }
        };
        Ok(Some(match x {
            ChainElt::Top if self.blocks().is_empty() => ChainElt::Bottom,
            ChainElt::Top => last_of(self.blocks().len() - 1),
            ChainElt::At {
                block,
                coord: Coord::Nat(0),
            } => {
                if block == 0 {
                    ChainElt::Bottom
                } else {
                    last_of(block - 1)
                }
            }
            ChainElt::At {
                block,
                coord: Coord::Nat(i),
            } => ChainElt::nat(block, i - 1),
            _ => unreachable!("limits and bottom have no predecessor"),
        }))
    }

    /// `a ≪ b`: `a ≤ b` when `b` has a predecessor or is the bottom, and
    /// `a < b` when `b` is a limit.
    pub fn way_below(&self, a: ChainElt, b: ChainElt) -> Result<bool> {
        let ord = self.cmp(a, b)?;
        Ok(if self.is_limit(b)? {
            ord == Ordering::Less
        } else {
            ord != Ordering::Greater
        })
    }

    /// Some `c` strictly between `a < b`, when one is representable: the
    /// midpoint inside a `Dense` block, the next index inside an `Omega`
    /// block.
    pub fn between(&self, a: ChainElt, b: ChainElt) -> Result<Option<ChainElt>> {
        if self.cmp(a, b)? != Ordering::Less {
            return Ok(None);
        }
        let candidates = self.landmarks_between(a, b)?;
        Ok(candidates.into_iter().next())
    }

    fn landmarks_between(&self, a: ChainElt, b: ChainElt) -> Result<Vec<ChainElt>> {
        let mut out = Vec::new();
        let half = Ratio::new(1, 2);
        let push = |out: &mut Vec<ChainElt>, c: ChainElt| -> Result<()> {
            if self.cmp(a, c)? == Ordering::Less && self.cmp(c, b)? == Ordering::Less {
                out.push(c);
            }
            Ok(())
        };
        // same-block refinements first
        match (a, b) {
            (
                ChainElt::At {
                    block: i,
                    coord: Coord::Rat(p),
                },
                ChainElt::At {
                    block: j,
                    coord: Coord::Rat(q),
                },
            ) if i == j => push(&mut out, ChainElt::At {
                block: i,
                coord: Coord::Rat((p + q) * half),
            })?,
            (
                ChainElt::At {
                    block,
                    coord: Coord::Nat(i),
                },
                _,
            ) if self.blocks()[block] == Block::Omega => push(&mut out, ChainElt::nat(block, i + 1))?,
            (
                ChainElt::At {
                    block,
                    coord: Coord::Rat(p),
                },
                _,
            ) => push(&mut out, ChainElt::At {
                block,
                coord: Coord::Rat((p + Ratio::one()) * half),
            })?,
            _ => {}
        }
        // otherwise a point near the start of some block
        for (i, blk) in self.blocks().iter().enumerate() {
            let c = match blk {
                Block::Dense => ChainElt::rat(i, 1, 2),
                _ => ChainElt::nat(i, 0),
            };
            push(&mut out, c)?;
            if let Block::Fin(k) = blk {
                push(&mut out, ChainElt::nat(i, k - 1))?;
            }
            if blk.is_open_ended() {
                push(&mut out, self.normalize(ChainElt::BlockSup(i))?)?;
            }
        }
        if let ChainElt::At {
            block,
            coord: Coord::Rat(q),
        } = b
        {
            push(&mut out, ChainElt::At {
                block,
                coord: Coord::Rat(q * half),
            })?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(s: &str) -> ChainFrame {
        s.parse().unwrap()
    }

    #[test]
    fn comparison_examples() {
        let om = frame("omega");
        assert_eq!(
            om.cmp(ChainElt::nat(0, 3), ChainElt::nat(0, 5)).unwrap(),
            Ordering::Less
        );
        assert_eq!(om.join(&[ChainElt::nat(0, 9), ChainElt::Top]).unwrap(), ChainElt::Top);
        let fd = frame("fin:2+dense");
        assert_eq!(
            fd.cmp(ChainElt::nat(0, 1), ChainElt::rat(1, 1, 2)).unwrap(),
            Ordering::Less
        );
        assert_eq!(om.meet(&[]).unwrap(), ChainElt::Top);
        assert_eq!(om.join(&[]).unwrap(), ChainElt::Bottom);
    }

    #[test]
    fn normalization() {
        let c = frame("omega+fin:1+dense+dense+omega");
        assert_eq!(c.blocks().len(), 4);
        assert_eq!(c.normalize(ChainElt::BlockSup(0)).unwrap(), ChainElt::nat(1, 0));
        assert_eq!(c.normalize(ChainElt::BlockSup(2)).unwrap(), ChainElt::nat(3, 0));
        assert_eq!(c.normalize(ChainElt::BlockSup(3)).unwrap(), ChainElt::Top);
        let d = frame("omega+dense");
        assert_eq!(d.normalize(ChainElt::BlockSup(0)).unwrap(), ChainElt::BlockSup(0));
        assert!(c.normalize(ChainElt::BlockSup(1)).is_err());
        assert!(c.normalize(ChainElt::nat(1, 1)).is_err());
        assert!(c.normalize(ChainElt::rat(2, 3, 2)).is_err());
        assert!(c.normalize(ChainElt::nat(2, 0)).is_err());
        assert!(matches!(
            c.cmp(ChainElt::BlockSup(0), ChainElt::Top),
            Err(Error::Normalization(_))
        ));
    }

    #[test]
    fn limits() {
        let om = frame("omega");
        assert!(om.is_limit(ChainElt::Top).unwrap());
        assert!(!om.is_limit(ChainElt::nat(0, 0)).unwrap());
        let f3 = frame("fin:3");
        for x in [
            ChainElt::Bottom,
            ChainElt::nat(0, 0),
            ChainElt::nat(0, 2),
            ChainElt::Top,
        ] {
            assert!(!f3.is_limit(x).unwrap());
        }
        let d = frame("dense");
        assert!(d.is_limit(ChainElt::rat(0, 1, 2)).unwrap());
        let df = frame("dense+fin:1");
        assert!(df.is_limit(ChainElt::nat(1, 0)).unwrap());
        assert!(!df.is_limit(ChainElt::Top).unwrap());
        assert_eq!(df.predecessor(ChainElt::Top).unwrap(), Some(ChainElt::nat(1, 0)));
    }

    #[test]
    fn way_below_examples() {
        let om = frame("omega");
        assert!(om.way_below(ChainElt::nat(0, 3), ChainElt::Top).unwrap());
        assert!(!om.way_below(ChainElt::Top, ChainElt::Top).unwrap());
        assert!(om.way_below(ChainElt::Bottom, ChainElt::Top).unwrap());
        assert!(om.way_below(ChainElt::nat(0, 3), ChainElt::nat(0, 3)).unwrap());
    }

    #[test]
    fn element_syntax() {
        for s in ["bot", "top", "sup:0", "1:4", "2:1/3"] {
            assert_eq!(s.parse::<ChainElt>().unwrap().to_string(), s);
        }
        assert!("1:1/0".parse::<ChainElt>().is_err());
        assert!("x".parse::<ChainElt>().is_err());
    }

    #[test]
    fn degenerate_chain() {
        let p = ChainFrame::point();
        assert_eq!(p.normalize(ChainElt::Top).unwrap(), ChainElt::Bottom);
        assert!(p.way_below(ChainElt::Bottom, ChainElt::Bottom).unwrap());
    }
}
