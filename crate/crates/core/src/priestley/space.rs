use alloc::vec::Vec;

use crate::order::{cmp_canonical, full_mask, ones, PointSet, Poset};
use crate::{Error, Limits, Result};

/// A finite Priestley space: a poset carrying the discrete topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinPriestley {
    points: Poset,
    /// Clopen upsets in canonical order.
    upsets: Vec<u64>,
}

impl FinPriestley {
    pub fn new(points: Poset) -> Result<Self> {
        Self::with_limits(points, &Limits::default())
    }

    pub fn with_limits(points: Poset, limits: &Limits) -> Result<Self> {
        let upsets = points.upset_masks(limits)?;
        Ok(FinPriestley { points, upsets })
    }

    pub fn points(&self) -> &Poset {
        &self.points
    }

    pub fn size(&self) -> usize {
        self.points.size()
    }

    pub fn full_mask(&self) -> u64 {
        self.points.full_mask()
    }

    /// Clopen upsets in canonical order; with the discrete topology these
    /// are all upsets, which are also all open upsets.
    pub fn clopen_upsets(&self) -> &[u64] {
        &self.upsets
    }

    pub fn open_upsets(&self) -> impl Iterator<Item = u64> + '_ {
        self.upsets.iter().copied().filter(|&u| self.is_open(u))
    }

    /// Position of an upset in [`FinPriestley::clopen_upsets`].
    pub fn upset_index(&self, u: u64) -> Option<usize> {
        self.upsets
            .binary_search_by(|&v| cmp_canonical(v, u))
            .ok()
    }

    pub fn set(&self, mask: u64) -> Result<PointSet> {
        self.points.set(mask)
    }

    fn check_upset(&self, s: &PointSet) -> Result<u64> {
        let m = self.points.check(s)?;
        if self.points.is_upset_mask(m) {
            Ok(m)
        } else {
            Err(Error::NotUpset)
        }
    }

    // ----- topology: the one place the discrete topology is assumed -----

    /// Topological closure.
    #[inline]
    pub fn closure(&self, s: u64) -> u64 {
        s
    }

    #[inline]
    pub fn interior(&self, s: u64) -> u64 {
        s
    }

    #[inline]
    pub fn is_open(&self, s: u64) -> bool {
        self.interior(s) == s
    }

    #[inline]
    pub fn is_closed(&self, s: u64) -> bool {
        self.closure(s) == s
    }

    #[inline]
    pub fn is_clopen(&self, s: u64) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    /// `o` dense in `u`: `cl o = u`.
    #[inline]
    pub fn dense_in(&self, o: u64, u: u64) -> bool {
        self.closure(o) == u
    }

    // ----- spatial part ---------------------------------------------------

    /// Points `y` whose downset `↓y` is clopen.
    pub fn spatial_mask(&self) -> u64 {
        (0..self.size())
            .filter(|&y| self.is_clopen(self.points.down_row(y)))
            .fold(0, |m, y| m | 1 << y)
    }

    // ----- way below and kernel ------------------------------------------

    /// `V ≪ U`: every open upset `W` with `U ⊆ cl W` contains `V`.
    pub fn clop_way_below_mask(&self, v: u64, u: u64) -> bool {
        self.open_upsets()
            .all(|w| u & !self.closure(w) != 0 || v & !w == 0)
    }

    pub fn clop_way_below(&self, v: &PointSet, u: &PointSet) -> Result<bool> {
        Ok(self.clop_way_below_mask(self.check_upset(v)?, self.check_upset(u)?))
    }

    /// `ker U`, the union of clopen upsets way below `U`.
    ///
    /// `V ≪ U` says `V ⊆ W` for every open upset `W` with `U ⊆ cl W`, that
    /// is `V` lies inside the intersection of those `W`; the union is taken
    /// over the clopen upsets inside that intersection.
    pub fn kernel_mask(&self, u: u64) -> u64 {
        let bound = self
            .open_upsets()
            .filter(|&w| u & !self.closure(w) == 0)
            .fold(self.full_mask(), |m, w| m & w);
        self.union_of(|v| v & !bound == 0)
    }

    pub fn kernel(&self, u: &PointSet) -> Result<PointSet> {
        Ok(self.points.wrap(self.kernel_mask(self.check_upset(u)?)))
    }

    /// `ker U` straight from [`FinPriestley::clop_way_below_mask`].
    pub fn kernel_literal_mask(&self, u: u64) -> u64 {
        self.union_of(|v| self.clop_way_below_mask(v, u))
    }

    fn union_of(&self, keep: impl Fn(u64) -> bool) -> u64 {
        self.upsets
            .iter()
            .copied()
            .filter(|&v| self.is_clopen(v) && keep(v))
            .fold(0, |m, v| m | v)
    }

    // ----- Scott upsets and core -----------------------------------------

    /// Closed upset whose minimal points lie in the spatial part.
    pub fn is_scott_upset_mask(&self, f: u64) -> bool {
        self.is_closed(f)
            && self.points.is_upset_mask(f)
            && self.points.min_mask(f) & !self.spatial_mask() == 0
    }

    /// The same notion by the closure-reflection property: `F ⊆ cl U`
    /// implies `F ⊆ U` for each open upset `U`.
    pub fn is_scott_upset_dagger_mask(&self, f: u64) -> bool {
        self.is_closed(f)
            && self.points.is_upset_mask(f)
            && self
                .open_upsets()
                .all(|u| f & !self.closure(u) != 0 || f & !u == 0)
    }

    /// Both formulations; they are required to agree.
    pub fn is_scott_upset(&self, f: &PointSet) -> Result<bool> {
        let m = self.points.check(f)?;
        let a = self.is_scott_upset_mask(m);
        debug_assert_eq!(a, self.is_scott_upset_dagger_mask(m));
        Ok(a)
    }

    /// Clopen Scott upsets in canonical order.
    pub fn clopen_scott_upsets(&self) -> Vec<u64> {
        self.upsets
            .iter()
            .copied()
            .filter(|&v| self.is_clopen(v) && self.is_scott_upset_mask(v))
            .collect()
    }

    pub fn core_mask(&self, u: u64) -> u64 {
        self.union_of(|v| v & !u == 0 && self.is_scott_upset_mask(v))
    }

    pub fn core(&self, u: &PointSet) -> Result<PointSet> {
        Ok(self.points.wrap(self.core_mask(self.check_upset(u)?)))
    }

    // ----- well inside and regular part ----------------------------------

    /// `V ≺ U` iff `↓V ⊆ U`.
    pub fn clop_well_inside_mask(&self, v: u64, u: u64) -> bool {
        self.points.down_closure_mask(v) & !u == 0
    }

    pub fn clop_well_inside(&self, v: &PointSet, u: &PointSet) -> Result<bool> {
        Ok(self.clop_well_inside_mask(self.check_upset(v)?, self.check_upset(u)?))
    }

    pub fn reg_part_mask(&self, u: u64) -> u64 {
        self.union_of(|v| self.clop_well_inside_mask(v, u))
    }

    pub fn reg_part(&self, u: &PointSet) -> Result<PointSet> {
        Ok(self.points.wrap(self.reg_part_mask(self.check_upset(u)?)))
    }

    // ----- bisets and center ---------------------------------------------

    /// Connected components of the comparability graph.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for p in 0..self.size() {
            if seen >> p & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << p;
            loop {
                let next = ones(comp).fold(comp, |m, q| {
                    m | self.points.up_row(q) | self.points.down_row(q)
                });
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Clopen bisets (sets that are both upsets and downsets), as unions of
    /// comparability components, in canonical order.
    pub fn clopen_bisets(&self) -> Vec<u64> {
        let comps = self.components();
        let mut out: Vec<u64> = (0u64..1 << comps.len())
            .map(|pick| ones(pick).fold(0, |m, i| m | comps[i]))
            .filter(|&b| self.is_clopen(b))
            .collect();
        out.sort_by(|&a, &b| cmp_canonical(a, b));
        debug_assert!(out
            .iter()
            .all(|&b| self.points.is_upset_mask(b) && self.points.is_downset_mask(b)));
        out
    }

    /// Bisets by the definition: upsets that are also downsets.
    pub fn clopen_bisets_literal(&self) -> Vec<u64> {
        self.upsets
            .iter()
            .copied()
            .filter(|&b| self.is_clopen(b) && self.points.is_downset_mask(b))
            .collect()
    }

    pub fn center_mask(&self, u: u64) -> u64 {
        self.clopen_bisets()
            .into_iter()
            .filter(|&b| b & !u == 0)
            .fold(0, |m, b| m | b)
    }

    pub fn center(&self, u: &PointSet) -> Result<PointSet> {
        Ok(self.points.wrap(self.center_mask(self.check_upset(u)?)))
    }

    /// Every operator on every clopen upset, indexed like
    /// [`FinPriestley::clopen_upsets`].
    pub fn operator_table(&self) -> OperatorTable {
        let bisets = self.clopen_bisets();
        let scott = self.clopen_scott_upsets();
        let spatial = self.spatial_mask();
        let mut t = OperatorTable {
            upsets: self.upsets.clone(),
            ker: Vec::with_capacity(self.upsets.len()),
            core: Vec::with_capacity(self.upsets.len()),
            reg: Vec::with_capacity(self.upsets.len()),
            cen: Vec::with_capacity(self.upsets.len()),
            scott,
            bisets,
            spatial,
        };
        for &u in &self.upsets {
            t.ker.push(self.kernel_mask(u));
            t.core.push(
                t.scott
                    .iter()
                    .filter(|&&v| v & !u == 0)
                    .fold(0, |m, &v| m | v),
            );
            t.reg.push(self.reg_part_mask(u));
            t.cen.push(
                t.bisets
                    .iter()
                    .filter(|&&b| b & !u == 0)
                    .fold(0, |m, &b| m | b),
            );
        }
        t
    }

    /// Unit of the point side: the clopen upsets holding each point.
    pub fn point_filters(&self) -> Vec<u64> {
        (0..self.size())
            .map(|x| {
                self.upsets
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| u >> x & 1 == 1)
                    .fold(0, |m, (i, _)| m | 1 << i)
            })
            .collect()
    }

    pub(crate) fn all_subsets(&self, limit_points: usize) -> Result<impl Iterator<Item = u64>> {
        Limits::check(
            "subsets of a space",
            self.size() as u128,
            limit_points as u128,
        )?;
        Ok(0..=full_mask(self.size()))
    }
}

/// Kernel, core, regular part and center of every clopen upset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorTable {
    pub upsets: Vec<u64>,
    pub ker: Vec<u64>,
    pub core: Vec<u64>,
    pub reg: Vec<u64>,
    pub cen: Vec<u64>,
    /// Clopen Scott upsets.
    pub scott: Vec<u64>,
    /// Clopen bisets.
    pub bisets: Vec<u64>,
    pub spatial: u64,
}

impl OperatorTable {
    pub fn index(&self, u: u64) -> Option<usize> {
        self.upsets
            .binary_search_by(|&v| cmp_canonical(v, u))
            .ok()
    }
}
