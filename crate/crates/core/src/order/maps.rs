use alloc::vec::Vec;

use super::bits::ones;
use super::poset::Poset;
use crate::{Error, Limits, Result};

/// An order-preserving map between finite posets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    source: Poset,
    target: Poset,
    image: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: Poset, target: Poset, image: Vec<usize>) -> Result<Self> {
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
        for a in 0..source.size() {
            for b in ones(source.up_row(a)) {
                if !target.leq(image[a], image[b]) {
                    return Err(Error::NotMonotone(a, b));
                }
            }
        }
        Ok(MonotoneMap {
            source,
            target,
            image,
        })
    }

    pub fn identity(p: &Poset) -> Self {
        MonotoneMap {
            source: p.clone(),
            target: p.clone(),
            image: (0..p.size()).collect(),
        }
    }

    pub fn source(&self) -> &Poset {
        &self.source
    }

    pub fn target(&self) -> &Poset {
        &self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, p: usize) -> usize {
        self.image[p]
    }

    /// `self` after `first`.
    pub fn after(&self, first: &MonotoneMap) -> Result<MonotoneMap> {
        if first.target != self.source {
            return Err(Error::Binding);
        }
        Ok(MonotoneMap {
            source: first.source.clone(),
            target: self.target.clone(),
            image: first.image.iter().map(|&p| self.image[p]).collect(),
        })
    }

    /// Preimage of a mask over the target.
    pub fn preimage_mask(&self, s: u64) -> u64 {
        preimage(&self.image, s)
    }
}

#[inline]
pub(crate) fn preimage(image: &[usize], s: u64) -> u64 {
    image
        .iter()
        .enumerate()
        .filter(|&(_, &t)| s >> t & 1 == 1)
        .fold(0, |m, (p, _)| m | 1 << p)
}

/// All monotone maps `p -> q`, ordered lexicographically by image vector.
pub fn monotone_maps(p: &Poset, q: &Poset, limits: &Limits) -> Result<Vec<MonotoneMap>> {
    let mut out = Vec::new();
    for_each_monotone_image(p, q, limits, |img| {
        out.push(MonotoneMap {
            source: p.clone(),
            target: q.clone(),
            image: img.to_vec(),
        })
    })?;
    Ok(out)
}

/// Visits the image vector of every monotone map `p -> q` in lexicographic
/// order without materializing [`MonotoneMap`] values.
pub fn for_each_monotone_image(
    p: &Poset,
    q: &Poset,
    limits: &Limits,
    mut visit: impl FnMut(&[usize]),
) -> Result<()> {
    let space = (q.size() as u128).checked_pow(p.size() as u32).unwrap_or(u128::MAX);
    Limits::check("monotone map search space", space, limits.max_maps)?;
    let mut img = Vec::with_capacity(p.size());
    rec(p, q, &mut img, &mut visit);
    Ok(())
}

fn rec(p: &Poset, q: &Poset, img: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    let i = img.len();
    if i == p.size() {
        visit(img);
        return;
    }
    let mut allowed = q.full_mask();
    for (k, &t) in img.iter().enumerate() {
        if p.leq(k, i) {
            allowed &= q.up_row(t);
        }
        if p.leq(i, k) {
            allowed &= q.down_row(t);
        }
    }
    for t in ones(allowed) {
        img.push(t);
        rec(p, q, img, visit);
        img.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_from_examples() {
        let l = Limits::default();
        assert_eq!(monotone_maps(&Poset::chain(1), &Poset::chain(2), &l).unwrap().len(), 2);
        let maps = monotone_maps(&Poset::chain(2), &Poset::chain(2), &l).unwrap();
        let images: Vec<&[usize]> = maps.iter().map(|m| m.image()).collect();
        assert_eq!(images, [&[0, 0][..], &[0, 1], &[1, 1]]);
        assert_eq!(
            monotone_maps(&Poset::antichain(2), &Poset::chain(2), &l)
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn rejects_decreasing_map() {
        let c = Poset::chain(2);
        assert_eq!(
            MonotoneMap::new(c.clone(), c, alloc::vec![1, 0]),
            Err(Error::NotMonotone(0, 1))
        );
    }

    #[test]
    fn capacity() {
        let l = Limits {
            max_maps: 8,
            ..Limits::default()
        };
        assert!(monotone_maps(&Poset::antichain(3), &Poset::chain(2), &l).is_ok());
        assert!(monotone_maps(&Poset::antichain(4), &Poset::chain(2), &l).is_err());
    }

    #[test]
    fn composition() {
        let c = Poset::chain(2);
        let one = Poset::chain(1);
        let to_top = MonotoneMap::new(one.clone(), c.clone(), alloc::vec![1]).unwrap();
        let collapse = MonotoneMap::new(c.clone(), one, alloc::vec![0, 0]).unwrap();
        let round = to_top.after(&collapse).unwrap();
        assert_eq!(round.image(), [1, 1]);
        assert_eq!(round.preimage_mask(0b10), 0b11);
    }
}
