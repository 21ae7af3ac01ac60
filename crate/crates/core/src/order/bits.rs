use core::cmp::Ordering;

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Ones(u64);

impl Iterator for Ones {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Ones {}

#[inline]
pub fn ones(mask: u64) -> Ones {
    Ones(mask)
}

/// Canonical order on subsets: by cardinality, then lexicographically on the
/// ascending list of members.
pub fn cmp_canonical(a: u64, b: u64) -> Ordering {
    match a.count_ones().cmp(&b.count_ones()) {
        Ordering::Equal => {}
        o => return o,
    }
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    // the lists agree below the lowest differing point; whoever holds that
    // point has the smaller next member
    if a & (diff & diff.wrapping_neg()) != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn ones_lists_members() {
        assert_eq!(ones(0b1011).collect::<Vec<_>>(), [0, 1, 3]);
        assert_eq!(ones(0).count(), 0);
        assert_eq!(ones(1 << 63).collect::<Vec<_>>(), [63]);
    }

    #[test]
    fn canonical_order_matches_sorted_lists() {
        let mut all: Vec<u64> = (0..16).collect();
        all.sort_by(|&a, &b| cmp_canonical(a, b));
        let lists: Vec<Vec<usize>> = all.iter().map(|&m| ones(m).collect()).collect();
        for w in lists.windows(2) {
            assert!(w[0].len() < w[1].len() || (w[0].len() == w[1].len() && w[0] < w[1]));
        }
    }
}
