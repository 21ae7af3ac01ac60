//! Independent checks for the closed forms.
//!
//! Finite chains are handed to the ideal-based lattice oracle. Infinite
//! ones are probed on a finite set of landmark elements, deciding `a ≪ b`
//! from the family `S = {x : x < b}`: when interpolants keep existing
//! below `b` that family has supremum `b` and no maximum, so it defeats
//! `a = b`; otherwise `b` has an immediate predecessor and any family
//! reaching `b` must contain `b` itself.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{Block, ChainElt, ChainFrame, ChainPredicate, Coord};
use crate::order::MAX_POINTS;
use crate::Result;

/// Interpolation steps tried before a supremum is accepted.
const DEPTH: usize = 6;

impl ChainFrame {
    /// Bottom, top, the first points and ends of every block, and a few
    /// interior points, normalized and sorted.
    pub fn landmarks(&self) -> Result<Vec<ChainElt>> {
        let mut out = alloc::vec![ChainElt::Bottom, ChainElt::Top];
        for (i, b) in self.blocks().iter().enumerate() {
            match *b {
                Block::Fin(k) => {
                    out.push(ChainElt::nat(i, 0));
                    out.push(ChainElt::nat(i, k / 2));
                    out.push(ChainElt::nat(i, k - 1));
                }
                Block::Omega => {
                    out.extend((0..3).map(|j| ChainElt::nat(i, j)));
                    out.push(ChainElt::BlockSup(i));
                }
                Block::Dense => {
                    out.extend([(1, 4), (1, 2), (3, 4)].map(|(p, q)| ChainElt::rat(i, p, q)));
                    out.push(ChainElt::BlockSup(i));
                }
            }
        }
        let mut out = out
            .into_iter()
            .map(|x| self.normalize(x))
            .collect::<Result<Vec<_>>>()?;
        out.sort_by(|&x, &y| self.cmp(x, y).expect("normalized"));
        out.dedup();
        Ok(out)
    }

    /// Greatest landmark (or immediate coordinate neighbour) below `b`.
    fn below_candidate(&self, b: ChainElt) -> Result<Option<ChainElt>> {
        let mut cands = self.landmarks()?;
        if let ChainElt::At {
            block,
            coord: Coord::Nat(i),
        } = b
        {
            if i > 0 {
                cands.push(ChainElt::nat(block, i - 1));
            }
        }
        let mut best: Option<ChainElt> = None;
        for c in cands {
            if self.cmp(c, b)? == Ordering::Less
                && best.map_or(Ok(true), |m| self.cmp(m, c).map(|o| o == Ordering::Less))?
            {
                best = Some(c);
            }
        }
        Ok(best)
    }

    /// `{x : x < b}` has supremum `b`, shown by repeated interpolation.
    fn approached(&self, b: ChainElt, keep: impl Fn(ChainElt) -> Result<bool>) -> Result<bool> {
        let Some(mut c) = self.below_candidate(b)? else {
            return Ok(false);
        };
        for _ in 0..DEPTH {
            match self.between(c, b)? {
                Some(next) if keep(next)? => c = next,
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    /// `a ≪ b` decided from the family of elements strictly below `b`.
    pub fn way_below_witness(&self, a: ChainElt, b: ChainElt) -> Result<bool> {
        Ok(match self.cmp(a, b)? {
            Ordering::Greater => false,
            Ordering::Less => true,
            Ordering::Equal => !self.approached(b, |_| Ok(true))?,
        })
    }

    /// The predicate by an independent route: the ideal oracle when the
    /// chain is finite, landmark probing otherwise.
    pub fn predicate_oracle(&self, p: ChainPredicate) -> Result<bool> {
        if self.finite_size().is_some_and(|n| n <= MAX_POINTS as u64) {
            let l = self.to_lattice()?;
            return Ok(l.frame_predicate(p.frame_predicate()).holds);
        }
        use ChainPredicate::*;
        let marks = self.landmarks()?;
        let top = self.normalize(ChainElt::Top)?;
        let wb = |a, b| self.way_below_witness(a, b);
        let compact = wb(top, top)?;
        let stable = self.stable_on(&marks)?;
        let continuous = self.generated(&marks, |a, b| wb(a, b))?;
        let algebraic = self.generated(&marks, |a, b| {
            Ok(wb(a, a)? && self.leq(a, b)?)
        })?;
        let star = |a: ChainElt| -> Result<ChainElt> {
            // largest landmark disjoint from a
            let mut best = ChainElt::Bottom;
            for &c in &marks {
                if self.meet(&[a, c])? == ChainElt::Bottom && self.leq(best, c)? {
                    best = c;
                }
            }
            Ok(best)
        };
        let well_inside = |a, b| -> Result<bool> { Ok(self.join(&[star(a)?, b])? == top) };
        let regular = self.generated(&marks, well_inside)?;
        let zero_dim = self.generated(&marks, |a, b| {
            Ok(well_inside(a, a)? && self.leq(a, b)?)
        })?;
        Ok(match p {
            CompactFrame => compact,
            Continuous => continuous,
            StablyContinuous => continuous && stable,
            StablyCompact => continuous && stable && compact,
            Algebraic => algebraic,
            Arithmetic => algebraic && stable,
            Coherent => algebraic && stable && compact,
            Regular => regular,
            ZeroDimensional => zero_dim,
            Stone => zero_dim && compact,
        })
    }

    /// Every landmark `b` is the supremum of `{a : rel(a, b)}`: either `b`
    /// belongs to the set or the set climbs arbitrarily close to `b`.
    fn generated(
        &self,
        marks: &[ChainElt],
        rel: impl Fn(ChainElt, ChainElt) -> Result<bool>,
    ) -> Result<bool> {
        for &b in marks {
            if !(rel(b, b)? || self.approached(b, |c| rel(c, b))?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn stable_on(&self, marks: &[ChainElt]) -> Result<bool> {
        for &a in marks {
            for &b in marks {
                for &c in marks {
                    let wb = |x| self.way_below_witness(a, x);
                    if wb(b)? && wb(c)? && !wb(self.meet(&[b, c])?)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}
