use alloc::vec::Vec;

use super::StoneMapRecord;
use crate::dlat::{HomPredicate, LatticeHom};
use crate::priestley::SpaceMap;
use crate::{Error, Result};

/// The dual of a frame homomorphism `h : L -> M`: the map `X_M -> X_L`
/// sending a prime filter `x` to `h⁻¹[x]`.
pub fn dualize_hom<'a>(
    h: &LatticeHom<'_>,
    xl: &'a StoneMapRecord,
    xm: &'a StoneMapRecord,
) -> Result<SpaceMap<'a>> {
    if *h.source() != xl.lattice || *h.target() != xm.lattice {
        return Err(Error::Binding);
    }
    if !h.predicate(HomPredicate::FrameHom).holds {
        return Err(Error::NotFrameHom);
    }
    let image: Vec<usize> = xm
        .filters
        .iter()
        .map(|&x| {
            let pre = h
                .source()
                .elements()
                .filter(|&a| x >> h.apply(a) & 1 == 1)
                .fold(0u64, |m, a| m | 1 << a);
            xl.point_of_filter(pre).ok_or(Error::NotFrameHom)
        })
        .collect::<Result<_>>()?;
    SpaceMap::new(&xm.space, &xl.space, image)
}

/// `f⁻¹[φ_L(a)] = φ_M(h(a))` for every `a`.
pub(crate) fn natural(h: &LatticeHom<'_>, f: &SpaceMap<'_>, xl: &StoneMapRecord, xm: &StoneMapRecord) -> bool {
    h.source()
        .elements()
        .all(|a| f.preimage(xl.phi[a]) == xm.phi[h.apply(a)])
}
