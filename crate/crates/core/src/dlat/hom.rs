use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{FinDLat, OracleProfile};
use crate::order::ones;
use crate::{Error, Limits, Result, Verdict, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomPredicate {
    /// Preserves binary joins and meets.
    LatticeHom,
    /// Preserves finite joins and meets, empty ones included.
    FrameHom,
    /// Frame hom sending compact elements to compact elements.
    CoherentHom,
    /// Frame hom preserving `≪`.
    ProperHom,
}

impl HomPredicate {
    pub const ALL: [HomPredicate; 4] = [
        HomPredicate::LatticeHom,
        HomPredicate::FrameHom,
        HomPredicate::CoherentHom,
        HomPredicate::ProperHom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HomPredicate::LatticeHom => "latticeHom",
            HomPredicate::FrameHom => "frameHom",
            HomPredicate::CoherentHom => "coherentHom",
            HomPredicate::ProperHom => "properHom",
        }
    }
}

impl fmt::Display for HomPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HomPredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HomPredicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPredicate(s.into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HomFlags {
    pub lattice: bool,
    pub frame: bool,
    pub coherent: bool,
    pub proper: bool,
}

/// An element-wise map between two finite lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeHom<'a> {
    source: &'a FinDLat,
    target: &'a FinDLat,
    image: Vec<usize>,
}

impl<'a> LatticeHom<'a> {
    /// Any map of the right shape; properties are checked separately.
    pub fn new(source: &'a FinDLat, target: &'a FinDLat, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.size() {
            return Err(Error::Index {
                index: image.len(),
                size: source.size(),
            });
        }
        if let Some(&bad) = image.iter().find(|&&t| t >= target.size()) {
            return Err(Error::Index {
                index: bad,
                size: target.size(),
            });
        }
        Ok(LatticeHom {
            source,
            target,
            image,
        })
    }

    pub fn identity(l: &'a FinDLat) -> Self {
        LatticeHom {
            source: l,
            target: l,
            image: l.elements().collect(),
        }
    }

    pub fn source(&self) -> &'a FinDLat {
        self.source
    }

    pub fn target(&self) -> &'a FinDLat {
        self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, a: usize) -> usize {
        self.image[a]
    }

    /// `self` after `first`.
    pub fn after(&self, first: &LatticeHom<'a>) -> Result<LatticeHom<'a>> {
        if first.target != self.source {
            return Err(Error::Binding);
        }
        Ok(LatticeHom {
            source: first.source,
            target: self.target,
            image: first.image.iter().map(|&a| self.image[a]).collect(),
        })
    }

    pub fn predicate(&self, p: HomPredicate) -> Verdict {
        match p {
            HomPredicate::LatticeHom | HomPredicate::FrameHom => {
                self.predicate_with(p, None, None)
            }
            _ => {
                let (s, t) = (self.source.oracle_profile(), self.target.oracle_profile());
                self.predicate_with(p, Some(&s), Some(&t))
            }
        }
    }

    /// As [`LatticeHom::predicate`], reusing precomputed `≪` profiles.
    /// Profiles are required for the coherent and proper kinds.
    pub fn predicate_with(
        &self,
        p: HomPredicate,
        src: Option<&OracleProfile>,
        tgt: Option<&OracleProfile>,
    ) -> Verdict {
        let lattice = self.binary_laws();
        match p {
            HomPredicate::LatticeHom => lattice,
            HomPredicate::FrameHom => lattice.and(|| self.bounds()),
            HomPredicate::CoherentHom => {
                let (s, t) = profiles(src, tgt);
                lattice.and(|| self.bounds()).and(|| {
                    match ones(s.compact).find(|&a| t.compact >> self.image[a] & 1 == 0) {
                        None => Verdict::TRUE,
                        Some(a) => Verdict::fail(Witness::Element(a)),
                    }
                })
            }
            HomPredicate::ProperHom => {
                let (s, t) = profiles(src, tgt);
                lattice.and(|| self.bounds()).and(|| {
                    for a in self.source.elements() {
                        for b in ones(s.way_below[a]) {
                            if !t.holds(self.image[a], self.image[b]) {
                                return Verdict::fail(Witness::Pair(a, b));
                            }
                        }
                    }
                    Verdict::TRUE
                })
            }
        }
    }

    pub fn flags(&self) -> HomFlags {
        let (s, t) = (self.source.oracle_profile(), self.target.oracle_profile());
        self.flags_with(&s, &t)
    }

    pub fn flags_with(&self, src: &OracleProfile, tgt: &OracleProfile) -> HomFlags {
        let eval = |p| self.predicate_with(p, Some(src), Some(tgt)).holds;
        HomFlags {
            lattice: eval(HomPredicate::LatticeHom),
            frame: eval(HomPredicate::FrameHom),
            coherent: eval(HomPredicate::CoherentHom),
            proper: eval(HomPredicate::ProperHom),
        }
    }

    /// `h(⋁S) = ⋁h[S]` for every subset `S` of the source, by exhaustion.
    pub fn preserves_all_joins(&self) -> bool {
        let n = self.source.size();
        debug_assert!(n <= 20, "subset sweep is exponential");
        (0..1u64 << n).all(|s| {
            let img = ones(s).fold(0u64, |m, a| m | 1 << self.image[a]);
            self.image[self.source.join_mask(s)] == self.target.join_mask(img)
        })
    }

    fn binary_laws(&self) -> Verdict {
        let (l, m, h) = (self.source, self.target, &self.image);
        for a in l.elements() {
            for b in a..l.size() {
                if h[l.join(a, b)] != m.join(h[a], h[b]) || h[l.meet(a, b)] != m.meet(h[a], h[b]) {
                    return Verdict::fail(Witness::Pair(a, b));
                }
            }
        }
        Verdict::TRUE
    }

    fn bounds(&self) -> Verdict {
        let (l, m) = (self.source, self.target);
        if self.image[l.bottom()] != m.bottom() {
            Verdict::fail(Witness::Element(l.bottom()))
        } else if self.image[l.top()] != m.top() {
            Verdict::fail(Witness::Element(l.top()))
        } else {
            Verdict::TRUE
        }
    }
}

fn profiles<'p>(
    src: Option<&'p OracleProfile>,
    tgt: Option<&'p OracleProfile>,
) -> (&'p OracleProfile, &'p OracleProfile) {
    (
        src.expect("source profile required"),
        tgt.expect("target profile required"),
    )
}

/// Every map `l -> m` satisfying `kind`, ordered by image vector.
///
/// Only the bottom and the join-irreducibles are branched on; every other
/// element is a join of two smaller ones, which fixes its image. Candidates
/// are pruned by monotonicity and the meet law and each survivor is checked
/// against the full predicate.
pub fn enumerate_homs<'a>(
    l: &'a FinDLat,
    m: &'a FinDLat,
    kind: HomPredicate,
    limits: &Limits,
) -> Result<Vec<LatticeHom<'a>>> {
    let n = l.size();
    let mut order: Vec<usize> = l.elements().collect();
    order.sort_by_key(|&a| (l.order().down_row(a).count_ones(), a));
    let irreducible = l.join_irreducible_mask();
    let split: Vec<Option<(usize, usize)>> = l
        .elements()
        .map(|a| {
            if a == l.bottom() || irreducible >> a & 1 == 1 {
                return None;
            }
            let below = l.order().down_row(a) & !(1 << a);
            ones(below).find_map(|b| {
                ones(below)
                    .find(|&c| l.join(b, c) == a)
                    .map(|c| (b, c))
            })
        })
        .collect();
    let profiles = match kind {
        HomPredicate::CoherentHom | HomPredicate::ProperHom => {
            Some((l.oracle_profile(), m.oracle_profile()))
        }
        _ => None,
    };
    let bounded = kind != HomPredicate::LatticeHom;

    let mut search = HomSearch {
        l,
        m,
        order: &order,
        split: &split,
        bounded,
        image: alloc::vec![usize::MAX; n],
        nodes: 0,
        budget: limits.max_hom_search_nodes,
        found: Vec::new(),
    };
    search.run(0)?;
    let mut found = search.found;
    found.sort();
    Ok(found
        .into_iter()
        .map(|image| LatticeHom {
            source: l,
            target: m,
            image,
        })
        .filter(|h| {
            let (s, t) = match &profiles {
                Some((s, t)) => (Some(s), Some(t)),
                None => (None, None),
            };
            h.predicate_with(kind, s, t).holds
        })
        .collect())
}

struct HomSearch<'s> {
    l: &'s FinDLat,
    m: &'s FinDLat,
    order: &'s [usize],
    split: &'s [Option<(usize, usize)>],
    bounded: bool,
    image: Vec<usize>,
    nodes: u64,
    budget: u64,
    found: Vec<Vec<usize>>,
}

impl HomSearch<'_> {
    fn run(&mut self, k: usize) -> Result<()> {
        self.nodes += 1;
        Limits::check(
            "homomorphism search nodes",
            self.nodes as u128,
            self.budget as u128,
        )?;
        if k == self.order.len() {
            self.found.push(self.image.clone());
            return Ok(());
        }
        let a = self.order[k];
        let candidates = match self.split[a] {
            Some((b, c)) => 1u64 << self.m.join(self.image[b], self.image[c]),
            None if self.bounded && a == self.l.bottom() => 1 << self.m.bottom(),
            None if self.bounded && a == self.l.top() => 1 << self.m.top(),
            None => self.m.full_mask(),
        };
        for t in ones(candidates) {
            if self.bounded && a == self.l.top() && t != self.m.top() {
                continue;
            }
            if self.consistent(k, a, t) {
                self.image[a] = t;
                self.run(k + 1)?;
            }
        }
        self.image[a] = usize::MAX;
        Ok(())
    }

    fn consistent(&self, k: usize, a: usize, t: usize) -> bool {
        self.order[..k].iter().all(|&x| {
            let hx = self.image[x];
            let meet = self.l.meet(a, x);
            let hm = if meet == a { t } else { self.image[meet] };
            hm == self.m.meet(t, hx) && (!self.l.leq(x, a) || self.m.leq(hx, t))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::Poset;

    fn count(l: &FinDLat, m: &FinDLat, kind: HomPredicate) -> usize {
        enumerate_homs(l, m, kind, &Limits::default()).unwrap().len()
    }

    #[test]
    fn enumeration_examples() {
        let c2 = FinDLat::chain(2).unwrap();
        let c3 = FinDLat::chain(3).unwrap();
        let b2 = FinDLat::boolean(2).unwrap();
        assert_eq!(count(&c2, &c2, HomPredicate::FrameHom), 1);
        assert_eq!(count(&c3, &c2, HomPredicate::FrameHom), 2);
        assert_eq!(count(&b2, &c2, HomPredicate::FrameHom), 2);
    }

    #[test]
    fn predicate_examples() {
        let b2 = FinDLat::boolean(2).unwrap();
        let id = LatticeHom::identity(&b2);
        for p in HomPredicate::ALL {
            assert!(id.predicate(p).holds);
        }
        let c3 = FinDLat::chain(3).unwrap();
        let c2 = FinDLat::chain(2).unwrap();
        let h = LatticeHom::new(&c3, &c2, alloc::vec![0, 1, 1]).unwrap();
        assert!(h.predicate(HomPredicate::FrameHom).holds);
        assert!(h.predicate(HomPredicate::CoherentHom).holds);
        let g = LatticeHom::new(&b2, &c2, alloc::vec![0, 1, 1, 1]).unwrap();
        assert_eq!(
            g.predicate(HomPredicate::FrameHom),
            Verdict::fail(Witness::Pair(1, 2))
        );
    }

    /// Brute force over every map, filtered by the literal predicate.
    fn brute(l: &FinDLat, m: &FinDLat, kind: HomPredicate) -> Vec<Vec<usize>> {
        let (n, k) = (l.size(), m.size());
        let mut out = Vec::new();
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut img = alloc::vec![0; n];
            for slot in img.iter_mut().rev() {
                *slot = c % k;
                c /= k;
            }
            let h = LatticeHom::new(l, m, img.clone()).unwrap();
            if h.predicate(kind).holds {
                out.push(img);
            }
        }
        out
    }

    #[test]
    fn search_matches_brute_force() {
        let vee = FinDLat::birkhoff(&Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap()).unwrap();
        let lats = [
            FinDLat::chain(1).unwrap(),
            FinDLat::chain(2).unwrap(),
            FinDLat::chain(3).unwrap(),
            FinDLat::boolean(2).unwrap(),
            vee,
        ];
        for l in &lats {
            for m in &lats {
                if m.size().pow(l.size() as u32) > 50_000 {
                    continue;
                }
                for kind in HomPredicate::ALL {
                    let fast: Vec<Vec<usize>> = enumerate_homs(l, m, kind, &Limits::default())
                        .unwrap()
                        .into_iter()
                        .map(|h| h.image().to_vec())
                        .collect();
                    assert_eq!(fast, brute(l, m, kind), "{kind}");
                }
            }
        }
    }

    #[test]
    fn frame_homs_preserve_every_join() {
        let b2 = FinDLat::boolean(2).unwrap();
        let c3 = FinDLat::chain(3).unwrap();
        for h in enumerate_homs(&b2, &c3, HomPredicate::FrameHom, &Limits::default()).unwrap() {
            assert!(h.preserves_all_joins());
        }
    }

    #[test]
    fn node_budget() {
        let b3 = FinDLat::boolean(3).unwrap();
        let limits = Limits {
            max_hom_search_nodes: 3,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_homs(&b3, &b3, HomPredicate::FrameHom, &limits),
            Err(Error::Capacity { .. })
        ));
    }
}
