use alloc::vec::Vec;

use crate::dlat::FinDLat;
use crate::order::{cmp_canonical, ones, Poset};
use crate::priestley::FinPriestley;
use crate::{Error, Limits, Result};

/// A lattice, its Priestley space and the Stone map between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoneMapRecord {
    pub lattice: FinDLat,
    pub space: FinPriestley,
    /// `phi[a]`: mask of the points (prime filters) containing `a`.
    pub phi: Vec<u64>,
    /// `filters[x]`: the prime filter of point `x`, as an element mask.
    pub filters: Vec<u64>,
    /// `(filter, point)` sorted by filter, for lookups.
    index: Vec<(u64, usize)>,
}

impl StoneMapRecord {
    fn build(lattice: &FinDLat, filters: Vec<u64>, limits: &Limits) -> Result<Self> {
        let rows = filters
            .iter()
            .map(|&f| {
                filters
                    .iter()
                    .enumerate()
                    .filter(|&(_, &g)| f & !g == 0)
                    .fold(0u64, |m, (k, _)| m | 1 << k)
            })
            .collect();
        let points = Poset::from_up_rows(rows)?;
        let space = FinPriestley::with_limits(points, limits)?;
        let phi = lattice
            .elements()
            .map(|a| {
                filters
                    .iter()
                    .enumerate()
                    .filter(|&(_, &f)| f >> a & 1 == 1)
                    .fold(0u64, |m, (x, _)| m | 1 << x)
            })
            .collect();
        let mut index: Vec<(u64, usize)> =
            filters.iter().enumerate().map(|(x, &f)| (f, x)).collect();
        index.sort_unstable();
        Ok(StoneMapRecord {
            lattice: lattice.clone(),
            space,
            phi,
            filters,
            index,
        })
    }

    /// The point whose prime filter is `f`.
    pub fn point_of_filter(&self, f: u64) -> Option<usize> {
        self.index
            .binary_search_by_key(&f, |&(g, _)| g)
            .ok()
            .map(|i| self.index[i].1)
    }
}

/// Fast path: one point per join-irreducible `j`, with prime filter `↑j`.
pub fn priestley_space_of(l: &FinDLat) -> Result<StoneMapRecord> {
    priestley_space_of_with(l, &Limits::default())
}

pub fn priestley_space_of_with(l: &FinDLat, limits: &Limits) -> Result<StoneMapRecord> {
    let filters = ones(l.join_irreducible_mask())
        .map(|j| l.order().up_row(j))
        .collect();
    StoneMapRecord::build(l, filters, limits)
}

/// Oracle: every subset of the carrier that is a prime filter, in canonical
/// order of masks.
pub fn priestley_space_oracle(l: &FinDLat, limits: &Limits) -> Result<StoneMapRecord> {
    Limits::check(
        "prime filter oracle",
        l.size() as u128,
        limits.max_prime_filter_oracle as u128,
    )?;
    let n = l.size();
    let mut filters: Vec<u64> = (0u64..1 << n)
        .filter(|&f| is_prime_filter_literal(l, f))
        .collect();
    filters.sort_by(|&a, &b| cmp_canonical(a, b));
    StoneMapRecord::build(l, filters, limits)
}

fn is_prime_filter_literal(l: &FinDLat, f: u64) -> bool {
    let has = |a: usize| f >> a & 1 == 1;
    let nonempty = f != 0;
    let proper = f != l.full_mask();
    let upward = ones(f).all(|a| l.order().up_row(a) & !f == 0);
    let meets = ones(f).all(|a| ones(f).all(|b| has(l.meet(a, b))));
    let prime = l
        .elements()
        .all(|a| l.elements().all(|b| !has(l.join(a, b)) || has(a) || has(b)));
    nonempty && proper && upward && meets && prime
}

/// Order-isomorphism between the spaces of two records over the same
/// lattice that commutes with their Stone maps. Returns the point map.
pub fn match_records(a: &StoneMapRecord, b: &StoneMapRecord) -> Result<Vec<usize>> {
    if a.lattice != b.lattice || a.filters.len() != b.filters.len() {
        return Err(Error::IsoFailure(a.filters.len(), b.filters.len()));
    }
    let map: Vec<usize> = a
        .filters
        .iter()
        .enumerate()
        .map(|(x, &f)| b.point_of_filter(f).ok_or(Error::IsoFailure(x, x)))
        .collect::<Result<_>>()?;
    let (pa, pb) = (a.space.points(), b.space.points());
    for x in 0..map.len() {
        for y in 0..map.len() {
            if pa.leq(x, y) != pb.leq(map[x], map[y]) {
                return Err(Error::IsoFailure(x, y));
            }
        }
    }
    for e in a.lattice.elements() {
        let pushed = ones(a.phi[e]).fold(0u64, |m, x| m | 1 << map[x]);
        if pushed != b.phi[e] {
            return Err(Error::IsoFailure(e, e));
        }
    }
    Ok(map)
}

/// The lattice of clopen upsets of a space.
pub fn clop_up_lattice(x: &FinPriestley) -> Result<FinDLat> {
    FinDLat::birkhoff(x.points())
}

/// Witness map of a verified isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub forward: Vec<usize>,
}

/// Checks that `φ : L -> ClopUp(X_L)` is a lattice isomorphism.
pub fn round_trip_frame(l: &FinDLat) -> Result<IsoReport> {
    let rec = priestley_space_of(l)?;
    let m = clop_up_lattice(&rec.space)?;
    let forward: Vec<usize> = l
        .elements()
        .map(|a| m.element_of_upset(rec.phi[a]).ok_or(Error::IsoFailure(a, a)))
        .collect::<Result<_>>()?;
    check_bijection(&forward, m.size())?;
    for a in l.elements() {
        for b in l.elements() {
            let (fa, fb) = (forward[a], forward[b]);
            if l.leq(a, b) != m.leq(fa, fb)
                || forward[l.join(a, b)] != m.join(fa, fb)
                || forward[l.meet(a, b)] != m.meet(fa, fb)
            {
                return Err(Error::IsoFailure(a, b));
            }
        }
    }
    Ok(IsoReport { forward })
}

/// Checks that `ε(x) = {U ∈ ClopUp(X) : x ∈ U}` is an order-isomorphism
/// from `X` onto the prime filters of `ClopUp(X)`.
pub fn round_trip_space(x: &FinPriestley) -> Result<IsoReport> {
    let m = clop_up_lattice(x)?;
    let rec = priestley_space_of(&m)?;
    let eps = x.point_filters();
    let forward: Vec<usize> = eps
        .iter()
        .enumerate()
        .map(|(p, &f)| rec.point_of_filter(f).ok_or(Error::IsoFailure(p, p)))
        .collect::<Result<_>>()?;
    check_bijection(&forward, rec.space.size())?;
    let (px, py) = (x.points(), rec.space.points());
    for p in 0..x.size() {
        for q in 0..x.size() {
            if px.leq(p, q) != py.leq(forward[p], forward[q]) {
                return Err(Error::IsoFailure(p, q));
            }
        }
    }
    Ok(IsoReport { forward })
}

fn check_bijection(map: &[usize], target: usize) -> Result<()> {
    if map.len() != target {
        return Err(Error::IsoFailure(map.len(), target));
    }
    let mut seen = 0u64;
    for (i, &t) in map.iter().enumerate() {
        if seen >> t & 1 == 1 {
            return Err(Error::IsoFailure(i, t));
        }
        seen |= 1 << t;
    }
    Ok(())
}

/// `φ(⋁S) = cl(⋃{φ(s) : s ∈ S})`.
pub fn phi_join_law(rec: &StoneMapRecord, s: u64) -> bool {
    let lhs = rec.phi[rec.lattice.join_mask(s)];
    let union = ones(s).fold(0u64, |m, a| m | rec.phi[a]);
    lhs == rec.space.closure(union)
}
