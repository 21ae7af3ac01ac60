use core::fmt;
use core::str::FromStr;

use super::{FinDLat, OracleProfile};
use crate::order::ones;
use crate::{Error, Verdict, Witness};

/// Named frame properties, each evaluated from its definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FramePredicate {
    CompactFrame,
    Continuous,
    StablyContinuous,
    StablyCompact,
    Algebraic,
    Arithmetic,
    Coherent,
    Regular,
    ZeroDimensional,
    Stone,
    Spatial,
}

impl FramePredicate {
    pub const ALL: [FramePredicate; 11] = [
        FramePredicate::CompactFrame,
        FramePredicate::Continuous,
        FramePredicate::StablyContinuous,
        FramePredicate::StablyCompact,
        FramePredicate::Algebraic,
        FramePredicate::Arithmetic,
        FramePredicate::Coherent,
        FramePredicate::Regular,
        FramePredicate::ZeroDimensional,
        FramePredicate::Stone,
        FramePredicate::Spatial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FramePredicate::CompactFrame => "compactFrame",
            FramePredicate::Continuous => "continuous",
            FramePredicate::StablyContinuous => "stablyContinuous",
            FramePredicate::StablyCompact => "stablyCompact",
            FramePredicate::Algebraic => "algebraic",
            FramePredicate::Arithmetic => "arithmetic",
            FramePredicate::Coherent => "coherent",
            FramePredicate::Regular => "regular",
            FramePredicate::ZeroDimensional => "zeroDimensional",
            FramePredicate::Stone => "stone",
            FramePredicate::Spatial => "spatial",
        }
    }
}

impl fmt::Display for FramePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FramePredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        FramePredicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPredicate(s.into()))
    }
}

impl FinDLat {
    /// Evaluates a frame predicate; `≪` comes from the ideal oracle.
    pub fn frame_predicate(&self, p: FramePredicate) -> Verdict {
        self.frame_predicate_with(p, &self.oracle_profile())
    }

    pub fn frame_predicate_with(&self, p: FramePredicate, wb: &OracleProfile) -> Verdict {
        use FramePredicate::*;
        match p {
            CompactFrame => self.top_compact(wb),
            Continuous => self.continuous(wb),
            StablyContinuous => self.continuous(wb).and(|| self.stable(wb)),
            StablyCompact => self
                .continuous(wb)
                .and(|| self.stable(wb))
                .and(|| self.top_compact(wb)),
            Algebraic => self.algebraic(wb),
            Arithmetic => self.algebraic(wb).and(|| self.stable(wb)),
            Coherent => self
                .algebraic(wb)
                .and(|| self.stable(wb))
                .and(|| self.top_compact(wb)),
            Regular => self.regular(),
            ZeroDimensional => self.zero_dimensional(),
            Stone => self.top_compact(wb).and(|| self.zero_dimensional()),
            Spatial => self.spatial(),
        }
    }

    fn top_compact(&self, wb: &OracleProfile) -> Verdict {
        let t = self.top();
        if wb.holds(t, t) {
            Verdict::TRUE
        } else {
            Verdict::fail(Witness::Element(t))
        }
    }

    /// Every `a` equals the join of `{b : b ≪ a}`.
    fn continuous(&self, wb: &OracleProfile) -> Verdict {
        self.generated_by(|a| wb.below(a))
    }

    /// `a ≪ b` and `a ≪ c` imply `a ≪ b ∧ c`.
    fn stable(&self, wb: &OracleProfile) -> Verdict {
        for a in self.elements() {
            let row = wb.way_below[a];
            for b in ones(row) {
                for c in ones(row) {
                    if !wb.holds(a, self.meet(b, c)) {
                        return Verdict::fail(Witness::Triple(a, b, c));
                    }
                }
            }
        }
        Verdict::TRUE
    }

    /// Every `a` is the join of the compact elements below it.
    fn algebraic(&self, wb: &OracleProfile) -> Verdict {
        self.generated_by(|a| wb.compact & self.order().down_row(a))
    }

    fn regular(&self) -> Verdict {
        self.generated_by(|a| {
            self.elements()
                .filter(|&b| self.well_inside(b, a))
                .fold(0, |m, b| m | 1 << b)
        })
    }

    fn zero_dimensional(&self) -> Verdict {
        let c = self.complemented_mask();
        self.generated_by(|a| c & self.order().down_row(a))
    }

    fn generated_by(&self, gens: impl Fn(usize) -> u64) -> Verdict {
        match self.elements().find(|&a| self.join_mask(gens(a)) != a) {
            None => Verdict::TRUE,
            Some(a) => Verdict::fail(Witness::Element(a)),
        }
    }

    /// Prime filters separate: `a ≰ b` gives a prime filter holding `a`
    /// but not `b`.
    fn spatial(&self) -> Verdict {
        let primes = self.prime_filters();
        for a in self.elements() {
            for b in self.elements() {
                if self.leq(a, b) {
                    continue;
                }
                if !primes.iter().any(|&f| f >> a & 1 == 1 && f >> b & 1 == 0) {
                    return Verdict::fail(Witness::Pair(a, b));
                }
            }
        }
        Verdict::TRUE
    }
}
