use core::fmt;
use core::str::FromStr;

use super::{Block, ChainElt, ChainFrame};
use crate::dlat::FramePredicate;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChainPredicate {
    CompactFrame,
    Continuous,
    Algebraic,
    Arithmetic,
    Coherent,
    StablyContinuous,
    StablyCompact,
    Regular,
    ZeroDimensional,
    Stone,
}

impl ChainPredicate {
    pub const ALL: [ChainPredicate; 10] = [
        ChainPredicate::CompactFrame,
        ChainPredicate::Continuous,
        ChainPredicate::Algebraic,
        ChainPredicate::Arithmetic,
        ChainPredicate::Coherent,
        ChainPredicate::StablyContinuous,
        ChainPredicate::StablyCompact,
        ChainPredicate::Regular,
        ChainPredicate::ZeroDimensional,
        ChainPredicate::Stone,
    ];

    /// The frame predicate with the same definition.
    pub fn frame_predicate(self) -> FramePredicate {
        match self {
            ChainPredicate::CompactFrame => FramePredicate::CompactFrame,
            ChainPredicate::Continuous => FramePredicate::Continuous,
            ChainPredicate::Algebraic => FramePredicate::Algebraic,
            ChainPredicate::Arithmetic => FramePredicate::Arithmetic,
            ChainPredicate::Coherent => FramePredicate::Coherent,
            ChainPredicate::StablyContinuous => FramePredicate::StablyContinuous,
            ChainPredicate::StablyCompact => FramePredicate::StablyCompact,
            ChainPredicate::Regular => FramePredicate::Regular,
            ChainPredicate::ZeroDimensional => FramePredicate::ZeroDimensional,
            ChainPredicate::Stone => FramePredicate::Stone,
        }
    }

    pub fn name(self) -> &'static str {
        self.frame_predicate().name()
    }
}

impl fmt::Display for ChainPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChainPredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChainPredicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPredicate(s.into()))
    }
}

impl ChainFrame {
    /// Closed forms over the block word.
    ///
    /// In a chain `≪` is `≤` below non-limits and `<` below limits, meets
    /// are minima so `≪` is always stable, and every element is the join of
    /// what is way below it. Compact elements are the non-limits, so the
    /// chain is algebraic exactly when no block is dense. Pseudocomplements
    /// are trivial (`a* = 1` for `a = 0`, else `0`), so only the chains with
    /// at most two elements are regular or zero-dimensional.
    pub fn predicate(&self, p: ChainPredicate) -> bool {
        use ChainPredicate::*;
        let compact = self.top_is_compact();
        let algebraic = !self.blocks().contains(&Block::Dense);
        let tiny = self.is_degenerate() || self.blocks().is_empty();
        match p {
            CompactFrame => compact,
            Continuous | StablyContinuous => true,
            StablyCompact => compact,
            Algebraic | Arithmetic => algebraic,
            Coherent => algebraic && compact,
            Regular | ZeroDimensional | Stone => tiny,
        }
    }

    fn top_is_compact(&self) -> bool {
        let top = self.normalize(ChainElt::Top).expect("top is always normal");
        !self.is_limit(top).expect("normalized")
    }
}
