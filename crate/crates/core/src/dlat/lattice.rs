use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::order::{cmp_canonical, ones, PointSet, Poset, MAX_POINTS};
use crate::{Error, Limits, Result};

/// A finite bounded lattice with full join and meet tables.
///
/// Distributivity is part of the intended invariant but is only checked by
/// [`FinDLat::check_distributive`], so that non-distributive input can be
/// loaded and rejected explicitly.
#[derive(Debug, Clone)]
pub struct FinDLat {
    order: Poset,
    join: Vec<u8>,
    meet: Vec<u8>,
    bottom: usize,
    top: usize,
    names: Vec<String>,
    /// Poset and per-element upset masks when built by [`FinDLat::birkhoff`].
    birkhoff: Option<(Poset, Vec<u64>)>,
}

impl PartialEq for FinDLat {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for FinDLat {}

impl FinDLat {
    /// Lattice structure of a poset; fails unless every pair has a least
    /// upper and a greatest lower bound.
    pub fn from_order(order: Poset, names: Option<Vec<String>>) -> Result<Self> {
        let n = order.size();
        if n == 0 {
            return Err(Error::NotLattice(0, 0, "bottom element"));
        }
        let names = match names {
            Some(v) if v.len() != n => {
                return Err(Error::Index {
                    index: v.len(),
                    size: n,
                })
            }
            Some(v) => v,
            None => match order.labels() {
                Some(l) => l.to_vec(),
                None => (0..n).map(|i| i.to_string()).collect(),
            },
        };
        let mut join = alloc::vec![0u8; n * n];
        let mut meet = alloc::vec![0u8; n * n];
        for a in 0..n {
            for b in a..n {
                let ub = order.up_row(a) & order.up_row(b);
                let lub = ones(ub)
                    .find(|&u| ub & !order.up_row(u) == 0)
                    .ok_or(Error::NotLattice(a, b, "join"))?;
                let lb = order.down_row(a) & order.down_row(b);
                let glb = ones(lb)
                    .find(|&l| lb & !order.down_row(l) == 0)
                    .ok_or(Error::NotLattice(a, b, "meet"))?;
                for (x, y) in [(a, b), (b, a)] {
                    join[x * n + y] = lub as u8;
                    meet[x * n + y] = glb as u8;
                }
            }
        }
        let bottom = (0..n)
            .find(|&a| order.up_row(a) == order.full_mask())
            .ok_or(Error::NotLattice(0, 0, "bottom element"))?;
        let top = (0..n)
            .find(|&a| order.down_row(a) == order.full_mask())
            .ok_or(Error::NotLattice(0, 0, "top element"))?;
        Ok(FinDLat {
            order,
            join,
            meet,
            bottom,
            top,
            names,
            birkhoff: None,
        })
    }

    /// Lattice of upsets of `p` ordered by inclusion.
    pub fn birkhoff(p: &Poset) -> Result<Self> {
        Self::birkhoff_with(p, &Limits::default())
    }

    pub fn birkhoff_with(p: &Poset, limits: &Limits) -> Result<Self> {
        let limits = Limits {
            max_upsets: limits.max_upsets.min(MAX_POINTS),
            ..*limits
        };
        let upsets = p.upset_masks(&limits).map_err(|e| match e {
            Error::Capacity { needed, .. } => Error::Capacity {
                what: "lattice elements",
                needed,
                limit: MAX_POINTS as u128,
            },
            e => e,
        })?;
        let rows: Vec<u64> = upsets
            .iter()
            .map(|&u| {
                upsets
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| u & !v == 0)
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let order = Poset::from_valid_rows(rows);
        let names = upsets.iter().map(|&u| set_name(p, u)).collect();
        let mut lat = Self::from_order(order, Some(names))?;
        lat.birkhoff = Some((p.clone(), upsets));
        Ok(lat)
    }

    /// Chain with `n >= 1` elements.
    pub fn chain(n: usize) -> Result<Self> {
        Self::birkhoff(&Poset::chain(n.saturating_sub(1)))
    }

    /// Boolean lattice with `2^k` elements.
    pub fn boolean(k: usize) -> Result<Self> {
        Self::birkhoff(&Poset::antichain(k))
    }

    pub fn size(&self) -> usize {
        self.order.size()
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Poset and upset masks this lattice was built from, if any.
    pub fn birkhoff_source(&self) -> Option<(&Poset, &[u64])> {
        self.birkhoff.as_ref().map(|(p, u)| (p, &u[..]))
    }

    /// Element of a Birkhoff-built lattice given by an upset of its poset.
    pub fn element_of_upset(&self, mask: u64) -> Option<usize> {
        let (_, ups) = self.birkhoff.as_ref()?;
        ups.binary_search_by(|&u| cmp_canonical(u, mask)).ok()
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b] as usize
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b] as usize
    }

    /// Join of a mask of elements; the empty join is the bottom.
    pub fn join_mask(&self, s: u64) -> usize {
        ones(s).fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a mask of elements; the empty meet is the top.
    pub fn meet_mask(&self, s: u64) -> usize {
        ones(s).fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.size()
    }

    pub fn full_mask(&self) -> u64 {
        self.order.full_mask()
    }

    pub(crate) fn wrap(&self, mask: u64) -> PointSet {
        self.order.set(mask).expect("mask within carrier")
    }

    /// Checks `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` for every triple.
    pub fn check_distributive(&self) -> Result<()> {
        for a in self.elements() {
            for b in self.elements() {
                for c in b..self.size() {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Err(Error::Distributivity(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_distributive(&self) -> bool {
        self.check_distributive().is_ok()
    }

    /// Nonzero elements `j` such that `j = a ∨ b` forces `j = a` or `j = b`.
    pub fn join_irreducibles(&self) -> PointSet {
        self.wrap(self.join_irreducible_mask())
    }

    pub fn join_irreducible_mask(&self) -> u64 {
        let mut out = 0u64;
        for j in self.elements() {
            if j == self.bottom {
                continue;
            }
            let irreducible = self.elements().all(|a| {
                self.elements()
                    .all(|b| self.join(a, b) != j || a == j || b == j)
            });
            if irreducible {
                out |= 1 << j;
            }
        }
        out
    }

    /// The poset `P` with `birkhoff(P) ≅ self`: join-irreducibles under the
    /// reversed lattice order, since `↑j ⊆ ↑k` iff `k ≤ j`.
    pub fn birkhoff_poset(&self) -> (Poset, Vec<usize>) {
        let js: Vec<usize> = ones(self.join_irreducible_mask()).collect();
        let rows = js
            .iter()
            .map(|&j| {
                js.iter()
                    .enumerate()
                    .filter(|&(_, &k)| self.leq(k, j))
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect();
        (Poset::from_valid_rows(rows), js)
    }
}

fn set_name(p: &Poset, mask: u64) -> String {
    let parts: Vec<String> = ones(mask)
        .map(|i| match p.labels() {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        })
        .collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn birkhoff_examples() {
        let b2 = FinDLat::birkhoff(&Poset::antichain(2)).unwrap();
        assert_eq!(b2.size(), 4);
        assert_eq!(b2.names(), ["{}", "{0}", "{1}", "{0,1}"]);
        let c3 = FinDLat::birkhoff(&Poset::chain(2)).unwrap();
        assert_eq!(c3.size(), 3);
        assert!(c3.leq(1, 2) && c3.leq(0, 1));
        let one = FinDLat::birkhoff(&Poset::antichain(0)).unwrap();
        assert_eq!(one.size(), 1);
        assert_eq!(one.bottom(), one.top());
    }

    #[test]
    fn join_irreducibles_examples() {
        let b2 = FinDLat::boolean(2).unwrap();
        assert_eq!(b2.join_irreducible_mask(), 0b0110);
        let c3 = FinDLat::chain(3).unwrap();
        assert_eq!(c3.join_irreducible_mask(), 0b110);
        let c2 = FinDLat::chain(2).unwrap();
        assert_eq!(c2.join_irreducible_mask(), 0b10);
    }

    #[test]
    fn non_distributive_lattices_load_then_fail_validation() {
        // M3: 0 < a, b, c < 1
        let m3 = Poset::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        let m3 = FinDLat::from_order(m3, None).unwrap();
        assert!(matches!(m3.check_distributive(), Err(Error::Distributivity(..))));
        // N5: 0 < a < b < 1, 0 < c < 1
        let n5 = Poset::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        let n5 = FinDLat::from_order(n5, None).unwrap();
        assert!(matches!(n5.check_distributive(), Err(Error::Distributivity(..))));
    }

    #[test]
    fn non_lattice_rejected() {
        let anti = Poset::antichain(2);
        assert!(matches!(
            FinDLat::from_order(anti, None),
            Err(Error::NotLattice(..))
        ));
        assert!(FinDLat::from_order(Poset::antichain(0), None).is_err());
    }

    #[test]
    fn birkhoff_capacity() {
        assert!(matches!(
            FinDLat::birkhoff(&Poset::antichain(7)),
            Err(Error::Capacity { .. })
        ));
        assert_eq!(FinDLat::birkhoff(&Poset::antichain(6)).unwrap().size(), 64);
    }

    #[test]
    fn birkhoff_poset_recovers_source() {
        let vee = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
        let l = FinDLat::birkhoff(&vee).unwrap();
        assert!(l.birkhoff_poset().0.isomorphic(&vee));
    }
}
