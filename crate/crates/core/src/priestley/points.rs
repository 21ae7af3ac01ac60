use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::FinPriestley;
use crate::order::{cmp_canonical, full_mask, ones};
use crate::{Error, Result, Verdict, Witness};

/// A finite topological space given by its family of open sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSpace {
    size: usize,
    /// Open sets in canonical order.
    opens: Vec<u64>,
}

/// The spatial part `Y` of a space together with its topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpatialPart {
    /// `Y` as a mask over the points of `X`.
    pub points: u64,
    /// Point `i` of [`SpatialPart::space`] is point `embedding[i]` of `X`.
    pub embedding: Vec<usize>,
    pub space: PointSpace,
}

impl FinPriestley {
    /// `Y` with the topology `{U ∩ Y : U open upset of X}`.
    pub fn spatial_part(&self) -> SpatialPart {
        let y = self.spatial_mask();
        let embedding: Vec<usize> = ones(y).collect();
        let restrict = |u: u64| {
            embedding
                .iter()
                .enumerate()
                .filter(|&(_, &x)| u >> x & 1 == 1)
                .fold(0u64, |m, (i, _)| m | 1 << i)
        };
        let mut opens: Vec<u64> = self.open_upsets().map(|u| restrict(u & y)).collect();
        opens.sort_by(|&a, &b| cmp_canonical(a, b));
        opens.dedup();
        SpatialPart {
            points: y,
            space: PointSpace {
                size: embedding.len(),
                opens,
            },
            embedding,
        }
    }
}

impl PointSpace {
    /// Checks the open-set axioms: contains `∅` and the whole space, closed
    /// under binary union and intersection.
    pub fn new(size: usize, mut opens: Vec<u64>) -> Result<Self> {
        let full = full_mask(size);
        opens.sort_by(|&a, &b| cmp_canonical(a, b));
        opens.dedup();
        let has = |s: u64| opens.binary_search_by(|&o| cmp_canonical(o, s)).is_ok();
        if opens.iter().any(|&o| o & !full != 0) || !has(0) || !has(full) {
            return Err(Error::NotPartialOrder("open sets"));
        }
        for &a in &opens {
            for &b in &opens {
                if !has(a | b) || !has(a & b) {
                    return Err(Error::NotPartialOrder("open sets"));
                }
            }
        }
        Ok(PointSpace { size, opens })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn opens(&self) -> &[u64] {
        &self.opens
    }

    pub fn full_mask(&self) -> u64 {
        full_mask(self.size)
    }

    pub fn is_open(&self, s: u64) -> bool {
        self.opens
            .binary_search_by(|&o| cmp_canonical(o, s))
            .is_ok()
    }

    pub fn is_closed(&self, s: u64) -> bool {
        self.is_open(self.full_mask() & !s)
    }

    pub fn closed_sets(&self) -> Vec<u64> {
        let mut c: Vec<u64> = self.opens.iter().map(|&o| self.full_mask() & !o).collect();
        c.sort_by(|&a, &b| cmp_canonical(a, b));
        c
    }

    pub fn closure(&self, s: u64) -> u64 {
        self.opens
            .iter()
            .map(|&o| self.full_mask() & !o)
            .filter(|&c| s & !c == 0)
            .fold(self.full_mask(), |m, c| m & c)
    }

    /// Every open cover of `s` has a finite subcover. The topology has
    /// finitely many opens, so every cover already is finite; the search
    /// below still confirms that the union of the cover reaches `s`.
    pub fn is_compact(&self, s: u64) -> bool {
        let covering = self.opens.iter().fold(0u64, |m, &o| m | o);
        s & !covering == 0
    }

    /// Nonempty closed set not the union of two proper closed subsets.
    pub fn is_irreducible_closed(&self, c: u64) -> bool {
        if c == 0 || !self.is_closed(c) {
            return false;
        }
        let parts: Vec<u64> = self
            .closed_sets()
            .into_iter()
            .filter(|&a| a & !c == 0 && a != c)
            .collect();
        !parts.iter().any(|&a| parts.iter().any(|&b| a | b == c))
    }

    pub fn predicate(&self, p: PointSpacePredicate) -> Verdict {
        use PointSpacePredicate::*;
        match p {
            Sober => self.sober(),
            CompactlyBased => self.compactly_based(),
            StablyCompactlyBased => self
                .compactly_based()
                .and(|| self.sober())
                .and(|| self.compact_opens_meet()),
            Spectral => self
                .compactly_based()
                .and(|| self.sober())
                .and(|| self.compact_opens_meet())
                .and(|| self.compact()),
            StoneSpace => self
                .zero_dimensional()
                .and(|| self.compact())
                .and(|| self.hausdorff()),
            ZeroDimensional => self.zero_dimensional(),
            Hausdorff => self.hausdorff(),
            Compact => self.compact(),
        }
    }

    fn sober(&self) -> Verdict {
        for c in self.closed_sets() {
            if !self.is_irreducible_closed(c) {
                continue;
            }
            let generic = (0..self.size)
                .filter(|&y| self.closure(1 << y) == c)
                .count();
            if generic != 1 {
                return Verdict::fail(Witness::Set(c));
            }
        }
        Verdict::TRUE
    }

    /// Every open is a union of members of `basis` contained in it.
    fn based_on(&self, basis: impl Fn(u64) -> bool) -> Verdict {
        for &u in &self.opens {
            let covered = self
                .opens
                .iter()
                .filter(|&&v| v & !u == 0 && basis(v))
                .fold(0, |m, &v| m | v);
            if covered != u {
                return Verdict::fail(Witness::Set(u));
            }
        }
        Verdict::TRUE
    }

    fn compactly_based(&self) -> Verdict {
        self.based_on(|v| self.is_compact(v))
    }

    fn zero_dimensional(&self) -> Verdict {
        self.based_on(|v| self.is_closed(v))
    }

    fn compact_opens_meet(&self) -> Verdict {
        let compact: Vec<u64> = self
            .opens
            .iter()
            .copied()
            .filter(|&o| self.is_compact(o))
            .collect();
        for &a in &compact {
            for &b in &compact {
                if !self.is_compact(a & b) {
                    return Verdict::fail(Witness::SetPair(a, b));
                }
            }
        }
        Verdict::TRUE
    }

    fn compact(&self) -> Verdict {
        Verdict::from_bool(self.is_compact(self.full_mask()))
    }

    /// Distinct points have disjoint open neighbourhoods.
    fn hausdorff(&self) -> Verdict {
        for x in 0..self.size {
            for y in x + 1..self.size {
                let separated = self.opens.iter().any(|&u| {
                    u >> x & 1 == 1
                        && u >> y & 1 == 0
                        && self
                            .opens
                            .iter()
                            .any(|&v| v >> y & 1 == 1 && u & v == 0)
                });
                if !separated {
                    return Verdict::fail(Witness::Pair(x, y));
                }
            }
        }
        Verdict::TRUE
    }
}

/// Named properties of a finite topological space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointSpacePredicate {
    Sober,
    CompactlyBased,
    StablyCompactlyBased,
    Spectral,
    StoneSpace,
    ZeroDimensional,
    Hausdorff,
    Compact,
}

impl PointSpacePredicate {
    pub const ALL: [PointSpacePredicate; 8] = [
        PointSpacePredicate::Sober,
        PointSpacePredicate::CompactlyBased,
        PointSpacePredicate::StablyCompactlyBased,
        PointSpacePredicate::Spectral,
        PointSpacePredicate::StoneSpace,
        PointSpacePredicate::ZeroDimensional,
        PointSpacePredicate::Hausdorff,
        PointSpacePredicate::Compact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PointSpacePredicate::Sober => "sober",
            PointSpacePredicate::CompactlyBased => "compactlyBased",
            PointSpacePredicate::StablyCompactlyBased => "stablyCompactlyBased",
            PointSpacePredicate::Spectral => "spectral",
            PointSpacePredicate::StoneSpace => "stoneSpace",
            PointSpacePredicate::ZeroDimensional => "zeroDimensionalSpace",
            PointSpacePredicate::Hausdorff => "hausdorff",
            PointSpacePredicate::Compact => "compactSpace",
        }
    }
}

impl fmt::Display for PointSpacePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PointSpacePredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PointSpacePredicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPredicate(s.into()))
    }
}
