use alloc::string::String;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use super::bits::{cmp_canonical, full_mask, ones};
use super::pointset::PointSet;
use crate::{Error, Limits, Result};

/// Largest carrier a [`Poset`] can have; point sets are `u64` masks.
pub const MAX_POINTS: usize = 64;

/// Identity of a constructed poset. Clones share it, so a [`PointSet`] taken
/// from a clone can be used with the original.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PosetId(usize);

impl PosetId {
    fn fresh() -> Self {
        static NEXT: AtomicUsize = AtomicUsize::new(0);
        PosetId(NEXT.fetch_add(1, AtomicOrdering::Relaxed))
    }
}

/// A finite partial order on the points `0..size`.
///
/// `up[i]` is the mask of all `j` with `i <= j` and `down[i]` the mask of all
/// `j` with `j <= i`, so membership in the order is a single bit test.
#[derive(Debug, Clone)]
pub struct Poset {
    id: PosetId,
    up: Vec<u64>,
    down: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.up == other.up && self.labels == other.labels
    }
}

impl Eq for Poset {}

impl Poset {
    /// Reflexive-transitive closure of a cover relation.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if size > MAX_POINTS {
            return Err(Error::Capacity {
                what: "poset points",
                needed: size as u128,
                limit: MAX_POINTS as u128,
            });
        }
        let mut up: Vec<u64> = (0..size).map(|i| 1u64 << i).collect();
        for &(a, b) in covers {
            for p in [a, b] {
                if p >= size {
                    return Err(Error::Index { index: p, size });
                }
            }
            up[a] |= 1 << b;
        }
        for k in 0..size {
            let row = up[k];
            for r in up.iter_mut() {
                if *r >> k & 1 == 1 {
                    *r |= row;
                }
            }
        }
        for i in 0..size {
            for j in ones(up[i] & !(1u64 << i)) {
                if up[j] >> i & 1 == 1 {
                    return Err(Error::Cycle(i.min(j), i.max(j)));
                }
            }
        }
        Ok(Self::from_valid_rows(up))
    }

    /// Builds a poset from `up` rows, checking the partial order axioms.
    pub fn from_up_rows(up: Vec<u64>) -> Result<Self> {
        let size = up.len();
        if size > MAX_POINTS {
            return Err(Error::Capacity {
                what: "poset points",
                needed: size as u128,
                limit: MAX_POINTS as u128,
            });
        }
        let full = full_mask(size);
        for (i, &row) in up.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::Index {
                    index: 63 - (row & !full).leading_zeros() as usize,
                    size,
                });
            }
            if row >> i & 1 == 0 {
                return Err(Error::NotPartialOrder("not reflexive"));
            }
            for j in ones(row) {
                if j != i && up[j] >> i & 1 == 1 {
                    return Err(Error::NotPartialOrder("not antisymmetric"));
                }
                if up[j] & !row != 0 {
                    return Err(Error::NotPartialOrder("not transitive"));
                }
            }
        }
        Ok(Self::from_valid_rows(up))
    }

    pub(crate) fn from_valid_rows(up: Vec<u64>) -> Self {
        let size = up.len();
        let mut down = alloc::vec![0u64; size];
        for (i, &row) in up.iter().enumerate() {
            for j in ones(row) {
                down[j] |= 1 << i;
            }
        }
        Poset {
            id: PosetId::fresh(),
            up,
            down,
            labels: None,
        }
    }

    pub fn antichain(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        Self::from_valid_rows((0..n).map(|i| 1u64 << i).collect())
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        Self::from_valid_rows((0..n).map(|i| full_mask(n) & !full_mask(i)).collect())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size() {
            return Err(Error::Index {
                index: labels.len(),
                size: self.size(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn id(&self) -> PosetId {
        self.id
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a] >> b & 1 == 1
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Mask of `↑a`.
    #[inline]
    pub fn up_row(&self, a: usize) -> u64 {
        self.up[a]
    }

    /// Mask of `↓a`.
    #[inline]
    pub fn down_row(&self, a: usize) -> u64 {
        self.down[a]
    }

    pub fn up_rows(&self) -> &[u64] {
        &self.up
    }

    pub fn full_mask(&self) -> u64 {
        full_mask(self.size())
    }

    /// Hasse diagram as `(lower, upper)` pairs, sorted lexicographically.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size() {
            let above = self.up[a] & !(1u64 << a);
            for b in ones(above) {
                let between = above & self.down[b] & !(1u64 << b);
                if between == 0 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The order-dual poset on the same points (labels kept).
    pub fn dual(&self) -> Poset {
        let mut d = Self::from_valid_rows(self.down.clone());
        d.labels = self.labels.clone();
        d
    }

    /// Poset whose point `k` is `perm[k]` of `self`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        let inv = invert(perm);
        let rows = perm
            .iter()
            .map(|&p| ones(self.up[p]).fold(0u64, |m, q| m | 1 << inv[q]))
            .collect();
        let mut out = Self::from_valid_rows(rows);
        out.labels = self
            .labels
            .as_ref()
            .map(|l| perm.iter().map(|&p| l[p].clone()).collect());
        out
    }

    // ----- point sets -----------------------------------------------------

    pub fn set(&self, mask: u64) -> Result<PointSet> {
        let stray = mask & !self.full_mask();
        if stray != 0 {
            return Err(Error::Index {
                index: stray.trailing_zeros() as usize,
                size: self.size(),
            });
        }
        Ok(PointSet::from_raw(mask, self.size(), self.id))
    }

    pub fn set_of(&self, points: &[usize]) -> Result<PointSet> {
        let mut mask = 0u64;
        for &p in points {
            if p >= self.size() {
                return Err(Error::Index {
                    index: p,
                    size: self.size(),
                });
            }
            mask |= 1 << p;
        }
        Ok(PointSet::from_raw(mask, self.size(), self.id))
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::from_raw(0, self.size(), self.id)
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::from_raw(self.full_mask(), self.size(), self.id)
    }

    pub(crate) fn check(&self, s: &PointSet) -> Result<u64> {
        if s.owner() == self.id {
            Ok(s.bits())
        } else {
            Err(Error::Binding)
        }
    }

    pub(crate) fn wrap(&self, mask: u64) -> PointSet {
        PointSet::from_raw(mask, self.size(), self.id)
    }

    // ----- mask calculus --------------------------------------------------

    #[inline]
    pub fn up_closure_mask(&self, s: u64) -> u64 {
        ones(s).fold(0, |m, p| m | self.up[p])
    }

    #[inline]
    pub fn down_closure_mask(&self, s: u64) -> u64 {
        ones(s).fold(0, |m, p| m | self.down[p])
    }

    #[inline]
    pub fn is_upset_mask(&self, s: u64) -> bool {
        ones(s).all(|p| self.up[p] & !s == 0)
    }

    #[inline]
    pub fn is_downset_mask(&self, s: u64) -> bool {
        ones(s).all(|p| self.down[p] & !s == 0)
    }

    pub fn min_mask(&self, s: u64) -> u64 {
        ones(s)
            .filter(|&p| self.down[p] & s == 1 << p)
            .fold(0, |m, p| m | 1 << p)
    }

    pub fn max_mask(&self, s: u64) -> u64 {
        ones(s)
            .filter(|&p| self.up[p] & s == 1 << p)
            .fold(0, |m, p| m | 1 << p)
    }

    // ----- checked operations ---------------------------------------------

    /// Smallest upset containing `s`.
    pub fn up_closure(&self, s: &PointSet) -> Result<PointSet> {
        Ok(self.wrap(self.up_closure_mask(self.check(s)?)))
    }

    /// Smallest downset containing `s`.
    pub fn down_closure(&self, s: &PointSet) -> Result<PointSet> {
        Ok(self.wrap(self.down_closure_mask(self.check(s)?)))
    }

    pub fn is_upset(&self, s: &PointSet) -> Result<bool> {
        Ok(self.is_upset_mask(self.check(s)?))
    }

    pub fn is_downset(&self, s: &PointSet) -> Result<bool> {
        Ok(self.is_downset_mask(self.check(s)?))
    }

    /// Points of `s` with no strictly smaller point in `s`.
    pub fn min_elements(&self, s: &PointSet) -> Result<PointSet> {
        Ok(self.wrap(self.min_mask(self.check(s)?)))
    }

    /// Points of `s` with no strictly larger point in `s`.
    pub fn max_elements(&self, s: &PointSet) -> Result<PointSet> {
        Ok(self.wrap(self.max_mask(self.check(s)?)))
    }

    /// Every upset exactly once, in canonical order (cardinality, then
    /// lexicographic member list).
    pub fn all_upsets(&self) -> Result<Vec<PointSet>> {
        self.all_upsets_with(&Limits::default())
    }

    pub fn all_upsets_with(&self, limits: &Limits) -> Result<Vec<PointSet>> {
        Ok(self
            .upset_masks(limits)?
            .into_iter()
            .map(|m| self.wrap(m))
            .collect())
    }

    /// Masks of all upsets, in canonical order.
    pub fn upset_masks(&self, limits: &Limits) -> Result<Vec<u64>> {
        // decide points from the top of a linear extension down, so the
        // strict up-set of a point is settled before the point itself
        let mut order: Vec<usize> = (0..self.size()).collect();
        order.sort_by_key(|&p| core::cmp::Reverse(self.down[p].count_ones()));
        let mut out = Vec::new();
        self.upsets_rec(&order, 0, 0, limits.max_upsets, &mut out)?;
        out.sort_by(|&a, &b| cmp_canonical(a, b));
        Ok(out)
    }

    fn upsets_rec(
        &self,
        order: &[usize],
        k: usize,
        acc: u64,
        limit: usize,
        out: &mut Vec<u64>,
    ) -> Result<()> {
        if k == order.len() {
            if out.len() >= limit {
                return Err(Error::Capacity {
                    what: "upsets",
                    needed: out.len() as u128 + 1,
                    limit: limit as u128,
                });
            }
            out.push(acc);
            return Ok(());
        }
        let p = order[k];
        self.upsets_rec(order, k + 1, acc, limit, out)?;
        if self.up[p] & !(1u64 << p) & !acc == 0 {
            self.upsets_rec(order, k + 1, acc | 1 << p, limit, out)?;
        }
        Ok(())
    }

    /// Masks of all downsets, in canonical order.
    pub fn downset_masks(&self, limits: &Limits) -> Result<Vec<u64>> {
        self.dual().upset_masks(limits)
    }

    /// Length of the longest chain ending at each point (minimal points are 0).
    pub fn levels(&self) -> Vec<u32> {
        let mut order: Vec<usize> = (0..self.size()).collect();
        order.sort_by_key(|&p| self.down[p].count_ones());
        let mut level = alloc::vec![0u32; self.size()];
        for &p in &order {
            level[p] = ones(self.down[p] & !(1u64 << p))
                .map(|q| level[q] + 1)
                .max()
                .unwrap_or(0);
        }
        level
    }
}

pub(crate) fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = alloc::vec![0; perm.len()];
    for (k, &p) in perm.iter().enumerate() {
        inv[p] = k;
    }
    inv
}
