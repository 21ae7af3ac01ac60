use alloc::vec::Vec;

use super::FinDLat;
use crate::order::{closed_sets, ones, PointSet};

/// Way-below rows and compact elements computed from ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleProfile {
    /// `way_below[a]` is the mask of `b` with `a ≪ b`.
    pub way_below: Vec<u64>,
    pub compact: u64,
}

impl OracleProfile {
    #[inline]
    pub fn holds(&self, a: usize, b: usize) -> bool {
        self.way_below[a] >> b & 1 == 1
    }

    /// Mask of `a` with `a ≪ b`.
    pub fn below(&self, b: usize) -> u64 {
        self.way_below
            .iter()
            .enumerate()
            .filter(|&(_, &row)| row >> b & 1 == 1)
            .fold(0, |m, (a, _)| m | 1 << a)
    }
}

impl FinDLat {
    fn ideal_closure(&self, mut s: u64) -> u64 {
        s |= 1 << self.bottom();
        loop {
            let mut next = self.order().down_closure_mask(s);
            for a in ones(next) {
                for b in ones(next) {
                    next |= 1 << self.join(a, b);
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    }

    fn filter_closure(&self, mut s: u64) -> u64 {
        s |= 1 << self.top();
        loop {
            let mut next = self.order().up_closure_mask(s);
            for a in ones(next) {
                for b in ones(next) {
                    next |= 1 << self.meet(a, b);
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// Every (nonempty) ideal, as element masks in lectic order.
    pub fn ideals(&self) -> Vec<u64> {
        closed_sets(self.size(), |s| self.ideal_closure(s), usize::MAX)
            .expect("unbounded limit")
    }

    /// Every (nonempty) filter, including the improper one.
    pub fn filters(&self) -> Vec<u64> {
        closed_sets(self.size(), |s| self.filter_closure(s), usize::MAX)
            .expect("unbounded limit")
    }

    /// Proper filters `F` with `a ∨ b ∈ F` only if `a ∈ F` or `b ∈ F`.
    pub fn prime_filters(&self) -> Vec<u64> {
        self.filters()
            .into_iter()
            .filter(|&f| self.is_prime_filter(f))
            .collect()
    }

    /// Primeness of a filter mask, checked literally.
    pub fn is_prime_filter(&self, f: u64) -> bool {
        if f >> self.bottom() & 1 == 1 {
            return false;
        }
        self.elements().all(|a| {
            self.elements().all(|b| {
                f >> self.join(a, b) & 1 == 0 || f >> a & 1 == 1 || f >> b & 1 == 1
            })
        })
    }

    /// `a ≪ b` on a finite lattice; this is `a ≤ b`.
    ///
    /// [`FinDLat::way_below_oracle`] evaluates the definition directly.
    #[inline]
    pub fn way_below(&self, a: usize, b: usize) -> bool {
        self.leq(a, b)
    }

    /// `a ≪ b` iff every ideal whose join is above `b` contains `a`.
    pub fn way_below_oracle(&self, a: usize, b: usize) -> bool {
        self.ideals()
            .into_iter()
            .all(|i| !self.leq(b, self.join_mask(i)) || i >> a & 1 == 1)
    }

    /// All of `≪` and the compact elements from one pass over the ideals.
    pub fn oracle_profile(&self) -> OracleProfile {
        let n = self.size();
        let mut below = alloc::vec![self.full_mask(); n];
        for i in self.ideals() {
            let s = self.join_mask(i);
            for b in ones(self.order().down_row(s)) {
                below[b] &= i;
            }
        }
        let mut way_below = alloc::vec![0u64; n];
        for (b, &row) in below.iter().enumerate() {
            for a in ones(row) {
                way_below[a] |= 1 << b;
            }
        }
        let compact = (0..n)
            .filter(|&a| way_below[a] >> a & 1 == 1)
            .fold(0, |m, a| m | 1 << a);
        OracleProfile { way_below, compact }
    }

    /// Elements `a` with `a ≪ a`, via the ideal oracle.
    pub fn compact_elements(&self) -> PointSet {
        self.wrap(self.oracle_profile().compact)
    }

    /// Largest `c` with `a ∧ c = 0`, as the join of all such `c`.
    pub fn pseudocomplement(&self, a: usize) -> usize {
        let disjoint = self
            .elements()
            .filter(|&c| self.meet(a, c) == self.bottom())
            .fold(0u64, |m, c| m | 1 << c);
        self.join_mask(disjoint)
    }

    /// `a ≺ b` iff `a* ∨ b = 1`.
    pub fn well_inside(&self, a: usize, b: usize) -> bool {
        self.join(self.pseudocomplement(a), b) == self.top()
    }

    /// Some `c` with `a ∧ c = 0` and `a ∨ c = 1`, by search.
    pub fn complement(&self, a: usize) -> Option<usize> {
        self.elements()
            .find(|&c| self.meet(a, c) == self.bottom() && self.join(a, c) == self.top())
    }

    /// `C(L)`: elements with `a ≺ a`.
    pub fn complemented_elements(&self) -> PointSet {
        self.wrap(self.complemented_mask())
    }

    pub(crate) fn complemented_mask(&self) -> u64 {
        self.elements()
            .filter(|&a| self.well_inside(a, a))
            .fold(0, |m, a| m | 1 << a)
    }

    /// Every element has a complement.
    pub fn is_boolean(&self) -> bool {
        self.elements().all(|a| self.complement(a).is_some())
    }
}
