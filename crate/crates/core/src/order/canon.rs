use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::bits::ones;
use super::poset::Poset;
use crate::{Error, Limits, Result};

/// Canonical form of a poset: the `up` rows after relabeling by the
/// lexicographically least labeling compatible with refined point colors.
///
/// Two posets are isomorphic iff their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// The canonically labeled representative.
    pub fn to_poset(&self) -> Poset {
        Poset::from_valid_rows(self.rows.clone())
    }
}

impl Poset {
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        self.canonical_form_with(&Limits::default())
    }

    pub fn canonical_form_with(&self, limits: &Limits) -> Result<CanonicalForm> {
        let (perm, rows) = canonical_labeling(self, limits.max_canonical_permutations)?;
        debug_assert_eq!(self.relabel(&perm).up_rows(), &rows[..]);
        Ok(CanonicalForm { rows })
    }

    /// Order-isomorphism test through canonical forms.
    ///
    /// Tie-breaking is brute force over the refined color classes, so this
    /// is meant for small posets (the default permutation budget covers
    /// anything up to eight points).
    pub fn isomorphic(&self, other: &Poset) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let unlimited = u64::MAX;
        match (
            canonical_labeling(self, unlimited),
            canonical_labeling(other, unlimited),
        ) {
            (Ok((_, a)), Ok((_, b))) => a == b,
            _ => unreachable!("unlimited budget"),
        }
    }
}

/// Iterated color refinement seeded with (|↓p|, |↑p|, level). Colors are
/// ranks of sorted invariant tuples, so they never depend on point indices.
fn refined_colors(p: &Poset) -> Vec<u32> {
    let n = p.size();
    let levels = p.levels();
    let seed: Vec<[u32; 3]> = (0..n)
        .map(|i| {
            [
                p.down_row(i).count_ones(),
                p.up_row(i).count_ones(),
                levels[i],
            ]
        })
        .collect();
    let mut colors = rank(&seed);
    loop {
        let sig: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..n)
            .map(|i| {
                let mut below: Vec<u32> = ones(p.down_row(i) & !(1u64 << i))
                    .map(|j| colors[j])
                    .collect();
                let mut above: Vec<u32> = ones(p.up_row(i) & !(1u64 << i))
                    .map(|j| colors[j])
                    .collect();
                below.sort_unstable();
                above.sort_unstable();
                (colors[i], below, above)
            })
            .collect();
        let next = rank(&sig);
        if distinct(&next) == distinct(&colors) {
            return next;
        }
        colors = next;
    }
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect()
}

fn distinct(colors: &[u32]) -> usize {
    colors.iter().collect::<BTreeSet<_>>().len()
}

fn canonical_labeling(p: &Poset, budget: u64) -> Result<(Vec<usize>, Vec<u64>)> {
    let n = p.size();
    let colors = refined_colors(p);
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by_key(|&i| colors[i]);
    // slot k must hold a point of color slot_color[k]
    let slot_color: Vec<u32> = slots.iter().map(|&i| colors[i]).collect();

    let mut perms: u64 = 1;
    let mut run = 1u64;
    for k in 1..=n {
        if k < n && slot_color[k] == slot_color[k - 1] {
            run += 1;
        } else {
            for f in 2..=run {
                perms = perms.saturating_mul(f);
            }
            run = 1;
        }
    }
    Limits::check("canonical labelings", perms as u128, budget as u128)?;

    let mut search = Search {
        p,
        colors: &colors,
        slot_color: &slot_color,
        order: Vec::with_capacity(n),
        best: None,
    };
    search.run(0);
    let (perm, rows) = search.best.ok_or(Error::NotPartialOrder("empty search"))?;
    Ok((perm, rows))
}

struct Search<'a> {
    p: &'a Poset,
    colors: &'a [u32],
    slot_color: &'a [u32],
    order: Vec<usize>,
    best: Option<(Vec<usize>, Vec<u64>)>,
}

impl Search<'_> {
    fn run(&mut self, used: u64) {
        let k = self.order.len();
        if k == self.slot_color.len() {
            let rows = self.code();
            if self.best.as_ref().map_or(true, |(_, b)| rows < *b) {
                self.best = Some((self.order.clone(), rows));
            }
            return;
        }
        for q in 0..self.slot_color.len() {
            if used >> q & 1 == 0 && self.colors[q] == self.slot_color[k] {
                self.order.push(q);
                self.run(used | 1 << q);
                self.order.pop();
            }
        }
    }

    fn code(&self) -> Vec<u64> {
        let inv = super::poset::invert(&self.order);
        self.order
            .iter()
            .map(|&q| ones(self.p.up_row(q)).fold(0u64, |m, r| m | 1 << inv[r]))
            .collect()
    }
}

/// One canonically labeled representative per isomorphism class of posets
/// on `n` points, sorted by canonical form.
///
/// Built level by level: every poset on `n` points arises from one on
/// `n - 1` points by adding a maximal point above some downset.
pub fn enumerate_posets(n: usize, limits: &Limits) -> Result<Vec<Poset>> {
    Limits::check(
        "poset enumeration size",
        n as u128,
        limits.max_enumeration_size as u128,
    )?;
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(CanonicalForm { rows: Vec::new() });
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let base = form.to_poset();
            for d in base.downset_masks(limits)? {
                let mut rows: Vec<u64> = form.rows.clone();
                for q in ones(d) {
                    rows[q] |= 1 << (k - 1);
                }
                rows.push(1 << (k - 1));
                let grown = Poset::from_valid_rows(rows);
                next.insert(grown.canonical_form_with(limits)?);
            }
        }
        level = next;
    }
    Ok(level.iter().map(CanonicalForm::to_poset).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_chain_is_isomorphic() {
        let a = Poset::from_covers(2, &[(0, 1)]).unwrap();
        let b = Poset::from_covers(2, &[(1, 0)]).unwrap();
        assert!(a.isomorphic(&b));
        assert!(!a.isomorphic(&Poset::antichain(2)));
    }

    #[test]
    fn vee_and_wedge_differ() {
        // V: a < c, b < c ; Λ: c < a, c < b
        let vee = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
        let wedge = Poset::from_covers(3, &[(2, 0), (2, 1)]).unwrap();
        assert!(!vee.isomorphic(&wedge));
        assert!(vee.isomorphic(&wedge.dual()));
    }

    #[test]
    fn small_counts() {
        let l = Limits::default();
        let counts: Vec<usize> = (0..=4)
            .map(|n| enumerate_posets(n, &l).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 2, 5, 16]);
    }

    #[test]
    fn enumeration_is_capped() {
        let l = Limits {
            max_enumeration_size: 3,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_posets(4, &l),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn canonical_budget() {
        let l = Limits {
            max_canonical_permutations: 100,
            ..Limits::default()
        };
        assert!(Poset::antichain(4).canonical_form_with(&l).is_ok());
        assert!(Poset::antichain(5).canonical_form_with(&l).is_err());
    }
}
