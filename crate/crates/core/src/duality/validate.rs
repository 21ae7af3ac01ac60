use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::hom::natural;
use super::{dualize_hom, priestley_space_of_with, StoneMapRecord};
use crate::dlat::{enumerate_homs, FinDLat, FramePredicate, HomPredicate, OracleProfile};
use crate::order::ones;
use crate::priestley::{
    FinPriestley, LSpacePredicate, OperatorTable, PointSpacePredicate, SpatialPart,
};
use crate::{Error, Limits, Result, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    CoreChain,
    CompactCharacterization,
    AlgebraicEquivalence,
    ScottExtensions,
    ProperCoherent,
    ScottStable,
    ArithmeticEquivalence,
    CoherentEquivalence,
    CenSubReg,
    StoneCollapse,
    ZeroDimEquivalence,
    StoneEquivalence,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Theorem::CoreChain,
        Theorem::CompactCharacterization,
        Theorem::AlgebraicEquivalence,
        Theorem::ScottExtensions,
        Theorem::ProperCoherent,
        Theorem::ScottStable,
        Theorem::ArithmeticEquivalence,
        Theorem::CoherentEquivalence,
        Theorem::CenSubReg,
        Theorem::StoneCollapse,
        Theorem::ZeroDimEquivalence,
        Theorem::StoneEquivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::CoreChain => "coreChain",
            Theorem::CompactCharacterization => "compactCharacterization",
            Theorem::AlgebraicEquivalence => "algebraicEquivalence",
            Theorem::ScottExtensions => "scottExtensions",
            Theorem::ProperCoherent => "properCoherent",
            Theorem::ScottStable => "scottStable",
            Theorem::ArithmeticEquivalence => "arithmeticEquivalence",
            Theorem::CoherentEquivalence => "coherentEquivalence",
            Theorem::CenSubReg => "cenSubReg",
            Theorem::StoneCollapse => "stoneCollapse",
            Theorem::ZeroDimEquivalence => "zeroDimEquivalence",
            Theorem::StoneEquivalence => "stoneEquivalence",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.into()))
    }
}

/// One evaluated side (or hypothesis) of a statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Side {
    pub label: &'static str,
    pub holds: bool,
}

fn side(label: &'static str, holds: bool) -> Side {
    Side { label, holds }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub theorem: Theorem,
    pub passed: bool,
    /// Hypotheses of the statement; when one fails the check is vacuous.
    pub hypotheses: Vec<Side>,
    pub sides: Vec<Side>,
    pub witness: Option<Witness>,
    /// Homomorphisms examined, for statements about morphisms.
    pub homs_checked: u64,
}

impl Outcome {
    fn new(theorem: Theorem) -> Self {
        Outcome {
            theorem,
            passed: true,
            hypotheses: Vec::new(),
            sides: Vec::new(),
            witness: None,
            homs_checked: 0,
        }
    }

    fn fail(&mut self, w: Option<Witness>) {
        if self.passed {
            self.passed = false;
            self.witness = w;
        }
    }

    /// Every side agrees with the first.
    fn sides_agree(&mut self) {
        if self.sides.windows(2).any(|w| w[0].holds != w[1].holds) {
            self.fail(None);
        }
    }
}

/// A lattice with everything the validators need about it, computed from
/// the definitions: `≪` from ideals, and kernels, cores, regular parts and
/// centers of its dual straight from their defining formulas.
#[derive(Debug, Clone)]
pub struct LatticeDual {
    pub record: StoneMapRecord,
    pub profile: OracleProfile,
    pub table: OperatorTable,
    pub spatial: SpatialPart,
}

impl LatticeDual {
    pub fn new(l: &FinDLat) -> Result<Self> {
        Self::with_limits(l, &Limits::default())
    }

    pub fn with_limits(l: &FinDLat, limits: &Limits) -> Result<Self> {
        let record = priestley_space_of_with(l, limits)?;
        let table = literal_table(&record.space);
        let spatial = record.space.spatial_part();
        Ok(LatticeDual {
            profile: l.oracle_profile(),
            record,
            table,
            spatial,
        })
    }

    pub fn lattice(&self) -> &FinDLat {
        &self.record.lattice
    }

    pub fn space(&self) -> &FinPriestley {
        &self.record.space
    }

    fn frame(&self, p: FramePredicate) -> bool {
        self.lattice().frame_predicate_with(p, &self.profile).holds
    }

    fn lspace(&self, p: LSpacePredicate) -> bool {
        self.space().lspace_predicate_with(p, &self.table).holds
    }

    fn y(&self, p: PointSpacePredicate) -> bool {
        self.spatial.space.predicate(p).holds
    }

    fn index(&self, u: u64) -> usize {
        self.table.index(u).expect("clopen upset")
    }
}

fn literal_table(x: &FinPriestley) -> OperatorTable {
    let upsets: Vec<u64> = x.clopen_upsets().to_vec();
    let scott: Vec<u64> = upsets
        .iter()
        .copied()
        .filter(|&v| x.is_scott_upset_mask(v))
        .collect();
    let bisets = x.clopen_bisets_literal();
    let union_inside = |family: &[u64], u: u64| {
        family
            .iter()
            .filter(|&&v| v & !u == 0)
            .fold(0u64, |m, &v| m | v)
    };
    OperatorTable {
        ker: upsets.iter().map(|&u| x.kernel_literal_mask(u)).collect(),
        core: upsets.iter().map(|&u| union_inside(&scott, u)).collect(),
        reg: upsets.iter().map(|&u| x.reg_part_mask(u)).collect(),
        cen: upsets.iter().map(|&u| union_inside(&bisets, u)).collect(),
        spatial: x.spatial_mask(),
        upsets,
        scott,
        bisets,
    }
}

/// Checks one statement on `l`. Statements about morphisms range over the
/// frame homomorphisms between `l` and each companion with at most as many
/// join-irreducibles, in both directions.
pub fn validate(
    theorem: Theorem,
    l: &LatticeDual,
    companions: &[LatticeDual],
    limits: &Limits,
) -> Result<Outcome> {
    let mut out = Outcome::new(theorem);
    match theorem {
        Theorem::CoreChain => core_chain(l, &mut out),
        Theorem::CompactCharacterization => compact_characterization(l, &mut out),
        Theorem::AlgebraicEquivalence => algebraic_equivalence(l, &mut out),
        Theorem::ScottExtensions => scott_extensions(l, &mut out),
        Theorem::ProperCoherent => proper_coherent(l, companions, limits, &mut out)?,
        Theorem::ScottStable => scott_stable(l, &mut out),
        Theorem::ArithmeticEquivalence => three_way(
            &mut out,
            [
                side("L arithmetic", l.frame(FramePredicate::Arithmetic)),
                side("X arithmetic L-space", l.lspace(LSpacePredicate::ArithmeticL)),
                side("Y stably compactly based", l.y(PointSpacePredicate::StablyCompactlyBased)),
            ],
            (side("L algebraic", l.frame(FramePredicate::Algebraic)), true),
        ),
        Theorem::CoherentEquivalence => three_way(
            &mut out,
            [
                side("L coherent", l.frame(FramePredicate::Coherent)),
                side("X coherent L-space", l.lspace(LSpacePredicate::CoherentL)),
                side("Y spectral", l.y(PointSpacePredicate::Spectral)),
            ],
            (side("L algebraic", l.frame(FramePredicate::Algebraic)), true),
        ),
        Theorem::CenSubReg => cen_sub_reg(l, &mut out),
        Theorem::StoneCollapse => stone_collapse(l, &mut out),
        Theorem::ZeroDimEquivalence => three_way(
            &mut out,
            [
                side("L zero-dimensional", l.frame(FramePredicate::ZeroDimensional)),
                side("X zero-dimensional L-space", l.lspace(LSpacePredicate::ZeroDimL)),
                side("Y zero-dimensional", l.y(PointSpacePredicate::ZeroDimensional)),
            ],
            (side("L spatial", l.frame(FramePredicate::Spatial)), false),
        ),
        Theorem::StoneEquivalence => three_way(
            &mut out,
            [
                side("L Stone", l.frame(FramePredicate::Stone)),
                side("X Stone L-space", l.lspace(LSpacePredicate::StoneL)),
                side("Y Stone space", l.y(PointSpacePredicate::StoneSpace)),
            ],
            (side("L spatial", l.frame(FramePredicate::Spatial)), false),
        ),
    }
    Ok(out)
}

/// `sides[0] ⟺ sides[1]`, and `⟺ sides[2]` under the hypothesis. With
/// `whole` set the hypothesis governs all three sides.
fn three_way(out: &mut Outcome, sides: [Side; 3], (hyp, whole): (Side, bool)) {
    out.hypotheses.push(hyp);
    out.sides.extend(sides);
    if whole && !hyp.holds {
        return;
    }
    if sides[0].holds != sides[1].holds || (hyp.holds && sides[1].holds != sides[2].holds) {
        out.fail(None);
    }
}

fn core_chain(l: &LatticeDual, out: &mut Outcome) {
    let (x, t) = (l.space(), &l.table);
    for (i, &u) in t.upsets.iter().enumerate() {
        let (core, ker) = (t.core[i], t.ker[i]);
        if core & !ker != 0 || ker & !u != 0 {
            return out.fail(Some(Witness::Set(u)));
        }
        if x.is_scott_upset_mask(u) != (core == u) {
            return out.fail(Some(Witness::Set(u)));
        }
        for (j, &v) in t.upsets.iter().enumerate() {
            if u & !v == 0 && core & !t.core[j] != 0 {
                return out.fail(Some(Witness::SetPair(u, v)));
            }
        }
    }
    let algebraic = l.lspace(LSpacePredicate::AlgebraicL);
    let continuous = l.lspace(LSpacePredicate::ContinuousL);
    out.sides.push(side("X algebraic L-space", algebraic));
    out.sides.push(side("X continuous L-space", continuous));
    if algebraic && !continuous {
        out.fail(None);
    }
}

fn compact_characterization(l: &LatticeDual, out: &mut Outcome) {
    let (lat, x, rec) = (l.lattice(), l.space(), &l.record);
    for a in lat.elements() {
        let u = rec.phi[a];
        let compact = l.profile.holds(a, a);
        let kernel_full = l.table.ker[l.index(u)] == u;
        let scott = x.is_scott_upset_mask(u);
        if compact != kernel_full || kernel_full != scott {
            return out.fail(Some(Witness::Element(a)));
        }
    }
    let full = x.full_mask();
    out.sides.push(side("L compact", l.profile.holds(lat.top(), lat.top())));
    out.sides.push(side("X L-compact", l.table.ker[l.index(full)] == full));
    out.sides_agree();
}

fn algebraic_equivalence(l: &LatticeDual, out: &mut Outcome) {
    let (lat, x, rec) = (l.lattice(), l.space(), &l.record);
    for a in lat.elements() {
        let generated = lat.join_mask(l.profile.compact & lat.order().down_row(a)) == a;
        let u = rec.phi[a];
        if generated != x.dense_in(l.table.core[l.index(u)], u) {
            return out.fail(Some(Witness::Element(a)));
        }
    }
    out.sides.push(side("L algebraic", l.frame(FramePredicate::Algebraic)));
    out.sides.push(side("X algebraic L-space", l.lspace(LSpacePredicate::AlgebraicL)));
    out.sides_agree();
}

fn scott_extensions(l: &LatticeDual, out: &mut Outcome) {
    let continuous = l.lspace(LSpacePredicate::ContinuousL);
    out.hypotheses.push(side("X continuous L-space", continuous));
    if !continuous {
        return;
    }
    let (x, t) = (l.space(), &l.table);
    let y = t.spatial;
    let scott_upsets: Vec<u64> = t
        .upsets
        .iter()
        .copied()
        .filter(|&f| x.is_scott_upset_mask(f))
        .collect();
    let between = |lo: u64, hi: u64| t.scott.iter().any(|&v| lo & !v == 0 && v & !hi == 0);
    for (i, &u) in t.upsets.iter().enumerate() {
        let s1 = t.ker[i] == t.core[i];
        let s2 = x.dense_in(t.core[i], u);
        let s3 = ones(u & y).all(|p| between(1 << p, u));
        let s4 = scott_upsets
            .iter()
            .filter(|&&f| f & !t.ker[i] == 0)
            .all(|&f| between(f, u));
        if !(s1 == s2 && s2 == s3 && s3 == s4) {
            return out.fail(Some(Witness::Set(u)));
        }
    }
}

fn scott_stable(l: &LatticeDual, out: &mut Outcome) {
    let algebraic = l.lspace(LSpacePredicate::AlgebraicL);
    out.hypotheses.push(side("X algebraic L-space", algebraic));
    let arithmetic = l.lspace(LSpacePredicate::ArithmeticL);
    let t = &l.table;
    let mut closed = true;
    'outer: for &u in &t.scott {
        for &v in &t.scott {
            if !t.scott.contains(&(u & v)) {
                closed = false;
                if algebraic && arithmetic {
                    out.fail(Some(Witness::SetPair(u, v)));
                }
                break 'outer;
            }
        }
    }
    out.sides.push(side("X arithmetic L-space", arithmetic));
    out.sides.push(side("ClopSUp closed under intersection", closed));
    if algebraic {
        out.sides_agree();
    }
}

fn cen_sub_reg(l: &LatticeDual, out: &mut Outcome) {
    let t = &l.table;
    for (i, &u) in t.upsets.iter().enumerate() {
        if t.cen[i] & !t.reg[i] != 0 {
            return out.fail(Some(Witness::Set(u)));
        }
    }
    let zero_dim = l.lspace(LSpacePredicate::ZeroDimL);
    let regular = l.lspace(LSpacePredicate::RegularL);
    let stone = l.lspace(LSpacePredicate::StoneL);
    let compact = l.lspace(LSpacePredicate::LCompact);
    out.sides.push(side("X zero-dimensional L-space", zero_dim));
    out.sides.push(side("X regular L-space", regular));
    out.sides.push(side("X Stone L-space", stone));
    if (zero_dim && !regular) || (stone && !(regular && compact)) {
        out.fail(None);
    }
}

fn stone_collapse(l: &LatticeDual, out: &mut Outcome) {
    let stone = l.lspace(LSpacePredicate::StoneL);
    out.hypotheses.push(side("X Stone L-space", stone));
    if !stone {
        return;
    }
    let t = &l.table;
    if let Some(&v) = t
        .scott
        .iter()
        .find(|v| !t.bisets.contains(v))
        .or_else(|| t.bisets.iter().find(|v| !t.scott.contains(v)))
    {
        return out.fail(Some(Witness::Set(v)));
    }
    for (i, &u) in t.upsets.iter().enumerate() {
        if t.cen[i] != t.core[i] {
            return out.fail(Some(Witness::Set(u)));
        }
    }
}

fn proper_coherent(
    l: &LatticeDual,
    companions: &[LatticeDual],
    limits: &Limits,
    out: &mut Outcome,
) -> Result<()> {
    let width = l.space().size();
    for m in companions.iter().filter(|m| m.space().size() <= width) {
        check_homs(l, m, limits, out)?;
        if !out.passed {
            return Ok(());
        }
        check_homs(m, l, limits, out)?;
        if !out.passed {
            return Ok(());
        }
    }
    Ok(())
}

/// Every frame homomorphism `h : a -> b` and its dual `f : X_b -> X_a`.
fn check_homs(a: &LatticeDual, b: &LatticeDual, limits: &Limits, out: &mut Outcome) -> Result<()> {
    let homs = enumerate_homs(a.lattice(), b.lattice(), HomPredicate::FrameHom, limits)?;
    let alg_a = a.lspace(LSpacePredicate::AlgebraicL);
    let alg_b = b.lspace(LSpacePredicate::AlgebraicL);
    for h in &homs {
        out.homs_checked += 1;
        let f = dualize_hom(h, &a.record, &b.record)?;
        let flags = f.flags_with(&b.table, &a.table);
        let coherent_h = h
            .predicate_with(HomPredicate::CoherentHom, Some(&a.profile), Some(&b.profile))
            .holds;
        let proper_h = h
            .predicate_with(HomPredicate::ProperHom, Some(&a.profile), Some(&b.profile))
            .holds;
        // f runs from X_b (algebraic when b is) to X_a
        let ok = flags.l_morphism
            && natural(h, &f, &a.record, &b.record)
            && !(flags.proper && alg_b && !flags.coherent)
            && !(flags.coherent && alg_a && !flags.proper)
            && !(alg_a && alg_b && coherent_h != proper_h);
        if !ok {
            out.fail(Some(Witness::Map(h.image().to_vec())));
            return Ok(());
        }
    }
    Ok(())
}
