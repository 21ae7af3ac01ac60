use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{FinPriestley, OperatorTable};
use crate::order::{for_each_monotone_image, MonotoneMap};
use crate::{Error, Limits, Result, Verdict, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MapPredicate {
    /// `f⁻¹ cl U = cl f⁻¹ U` for every open upset `U`.
    LMorphism,
    /// `f⁻¹(ker U) ⊆ ker f⁻¹(U)` for every clopen upset `U`.
    ProperL,
    /// `f⁻¹(core U) ⊆ core f⁻¹(U)` for every clopen upset `U`.
    CoherentL,
}

impl MapPredicate {
    pub const ALL: [MapPredicate; 3] = [
        MapPredicate::LMorphism,
        MapPredicate::ProperL,
        MapPredicate::CoherentL,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapPredicate::LMorphism => "lMorphism",
            MapPredicate::ProperL => "properL",
            MapPredicate::CoherentL => "coherentL",
        }
    }
}

impl fmt::Display for MapPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapPredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MapPredicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPredicate(s.into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MapFlags {
    pub l_morphism: bool,
    pub proper: bool,
    pub coherent: bool,
}

/// A monotone map between finite Priestley spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceMap<'a> {
    source: &'a FinPriestley,
    target: &'a FinPriestley,
    image: Vec<usize>,
}

impl<'a> SpaceMap<'a> {
    pub fn new(source: &'a FinPriestley, target: &'a FinPriestley, image: Vec<usize>) -> Result<Self> {
        // validation only; the owned copy is dropped
        MonotoneMap::new(source.points().clone(), target.points().clone(), image.clone())?;
        Ok(SpaceMap {
            source,
            target,
            image,
        })
    }

    pub(crate) fn new_unchecked(
        source: &'a FinPriestley,
        target: &'a FinPriestley,
        image: Vec<usize>,
    ) -> Self {
        SpaceMap {
            source,
            target,
            image,
        }
    }

    pub fn identity(x: &'a FinPriestley) -> Self {
        SpaceMap {
            source: x,
            target: x,
            image: (0..x.size()).collect(),
        }
    }

    pub fn source(&self) -> &'a FinPriestley {
        self.source
    }

    pub fn target(&self) -> &'a FinPriestley {
        self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `self` after `first`.
    pub fn after(&self, first: &SpaceMap<'a>) -> Result<SpaceMap<'a>> {
        if first.target != self.source {
            return Err(Error::Binding);
        }
        Ok(SpaceMap {
            source: first.source,
            target: self.target,
            image: first.image.iter().map(|&x| self.image[x]).collect(),
        })
    }

    pub fn preimage(&self, s: u64) -> u64 {
        crate::order::preimage(&self.image, s)
    }

    pub fn predicate(&self, p: MapPredicate) -> Verdict {
        let (s, t) = (self.source.operator_table(), self.target.operator_table());
        self.predicate_with(p, &s, &t)
    }

    /// As [`SpaceMap::predicate`], reusing the operator tables of both ends.
    pub fn predicate_with(&self, p: MapPredicate, src: &OperatorTable, tgt: &OperatorTable) -> Verdict {
        let (x1, x2) = (self.source, self.target);
        match p {
            MapPredicate::LMorphism => {
                for u in x2.open_upsets() {
                    if self.preimage(x2.closure(u)) != x1.closure(self.preimage(u)) {
                        return Verdict::fail(Witness::Set(u));
                    }
                }
                Verdict::TRUE
            }
            MapPredicate::ProperL => self.reflects(src, tgt, |t| &t.ker),
            MapPredicate::CoherentL => self.reflects(src, tgt, |t| &t.core),
        }
    }

    /// `f⁻¹(op U) ⊆ op f⁻¹(U)` for every clopen upset `U` of the target.
    fn reflects(
        &self,
        src: &OperatorTable,
        tgt: &OperatorTable,
        op: impl Fn(&OperatorTable) -> &Vec<u64>,
    ) -> Verdict {
        for (i, &u) in tgt.upsets.iter().enumerate() {
            let pre = self.preimage(u);
            let j = src.index(pre).expect("preimage of an upset is an upset");
            if self.preimage(op(tgt)[i]) & !op(src)[j] != 0 {
                return Verdict::fail(Witness::Set(u));
            }
        }
        Verdict::TRUE
    }

    pub fn flags_with(&self, src: &OperatorTable, tgt: &OperatorTable) -> MapFlags {
        MapFlags {
            l_morphism: self.predicate_with(MapPredicate::LMorphism, src, tgt).holds,
            proper: self.predicate_with(MapPredicate::ProperL, src, tgt).holds,
            coherent: self.predicate_with(MapPredicate::CoherentL, src, tgt).holds,
        }
    }
}

impl FinPriestley {
    /// Visits every monotone map `self -> target`.
    pub fn for_each_map<'a>(
        &'a self,
        target: &'a FinPriestley,
        limits: &Limits,
        mut visit: impl FnMut(&SpaceMap<'a>),
    ) -> Result<()> {
        for_each_monotone_image(self.points(), target.points(), limits, |img| {
            visit(&SpaceMap::new_unchecked(self, target, img.to_vec()))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::Poset;

    #[test]
    fn identity_has_every_property() {
        let x = FinPriestley::new(Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap()).unwrap();
        let id = SpaceMap::identity(&x);
        for p in MapPredicate::ALL {
            assert!(id.predicate(p).holds);
        }
    }

    #[test]
    fn map_to_point_is_coherent() {
        let x = FinPriestley::new(Poset::chain(2)).unwrap();
        let pt = FinPriestley::new(Poset::chain(1)).unwrap();
        let f = SpaceMap::new(&x, &pt, alloc::vec![0, 0]).unwrap();
        assert!(f.predicate(MapPredicate::CoherentL).holds);
        assert!(f.predicate(MapPredicate::ProperL).holds);
    }

    #[test]
    fn all_maps_between_small_spaces_are_proper_and_coherent() {
        let spaces = [
            FinPriestley::new(Poset::chain(2)).unwrap(),
            FinPriestley::new(Poset::antichain(2)).unwrap(),
            FinPriestley::new(Poset::antichain(0)).unwrap(),
        ];
        for a in &spaces {
            for b in &spaces {
                let (ta, tb) = (a.operator_table(), b.operator_table());
                a.for_each_map(b, &Limits::default(), |f| {
                    let flags = f.flags_with(&ta, &tb);
                    assert!(flags.l_morphism && flags.proper && flags.coherent);
                })
                .unwrap();
            }
        }
    }

    #[test]
    fn rejects_non_monotone() {
        let x = FinPriestley::new(Poset::chain(2)).unwrap();
        assert!(SpaceMap::new(&x, &x, alloc::vec![1, 0]).is_err());
    }
}
