use core::fmt;

use super::bits::{full_mask, ones, Ones};
use super::poset::PosetId;
use crate::{Error, Result};

/// A subset of the points of one specific [`Poset`](super::Poset).
///
/// Bulk operations are single mask operations; combining sets taken from
/// different posets is an [`Error::Binding`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    bits: u64,
    size: u8,
    owner: PosetId,
}

impl PointSet {
    pub(crate) fn from_raw(bits: u64, size: usize, owner: PosetId) -> Self {
        debug_assert!(bits & !full_mask(size) == 0);
        PointSet {
            bits,
            size: size as u8,
            owner,
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn owner(&self) -> PosetId {
        self.owner
    }

    /// Number of points of the ambient poset.
    pub fn universe(&self) -> usize {
        self.size as usize
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, p: usize) -> bool {
        p < 64 && self.bits >> p & 1 == 1
    }

    pub fn iter(&self) -> Ones {
        ones(self.bits)
    }

    fn bound(&self, other: &PointSet) -> Result<()> {
        if self.owner == other.owner {
            Ok(())
        } else {
            Err(Error::Binding)
        }
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet> {
        self.bound(other)?;
        Ok(PointSet {
            bits: self.bits | other.bits,
            ..*self
        })
    }

    pub fn intersection(&self, other: &PointSet) -> Result<PointSet> {
        self.bound(other)?;
        Ok(PointSet {
            bits: self.bits & other.bits,
            ..*self
        })
    }

    pub fn difference(&self, other: &PointSet) -> Result<PointSet> {
        self.bound(other)?;
        Ok(PointSet {
            bits: self.bits & !other.bits,
            ..*self
        })
    }

    pub fn is_subset(&self, other: &PointSet) -> Result<bool> {
        self.bound(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    pub fn complement(&self) -> PointSet {
        PointSet {
            bits: !self.bits & full_mask(self.size as usize),
            ..*self
        }
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
