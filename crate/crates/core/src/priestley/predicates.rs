use core::fmt;
use core::str::FromStr;

use super::{FinPriestley, OperatorTable};
use crate::{Error, Result, Verdict, Witness};

/// Named L-space properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LSpacePredicate {
    ContinuousL,
    AlgebraicL,
    ArithmeticL,
    CoherentL,
    KernelStable,
    LCompact,
    RegularL,
    ZeroDimL,
    StoneL,
}

impl LSpacePredicate {
    pub const ALL: [LSpacePredicate; 9] = [
        LSpacePredicate::ContinuousL,
        LSpacePredicate::AlgebraicL,
        LSpacePredicate::ArithmeticL,
        LSpacePredicate::CoherentL,
        LSpacePredicate::KernelStable,
        LSpacePredicate::LCompact,
        LSpacePredicate::RegularL,
        LSpacePredicate::ZeroDimL,
        LSpacePredicate::StoneL,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LSpacePredicate::ContinuousL => "continuousL",
            LSpacePredicate::AlgebraicL => "algebraicL",
            LSpacePredicate::ArithmeticL => "arithmeticL",
            LSpacePredicate::CoherentL => "coherentL",
            LSpacePredicate::KernelStable => "kernelStable",
            LSpacePredicate::LCompact => "lCompact",
            LSpacePredicate::RegularL => "regularL",
            LSpacePredicate::ZeroDimL => "zeroDimL",
            LSpacePredicate::StoneL => "stoneL",
        }
    }
}

impl fmt::Display for LSpacePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LSpacePredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LSpacePredicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPredicate(s.into()))
    }
}

impl FinPriestley {
    pub fn lspace_predicate(&self, p: LSpacePredicate) -> Verdict {
        self.lspace_predicate_with(p, &self.operator_table())
    }

    pub fn lspace_predicate_with(&self, p: LSpacePredicate, t: &OperatorTable) -> Verdict {
        use LSpacePredicate::*;
        match p {
            ContinuousL => self.dense_everywhere(t, &t.ker),
            AlgebraicL => self.dense_everywhere(t, &t.core),
            RegularL => self.dense_everywhere(t, &t.reg),
            ZeroDimL => self.dense_everywhere(t, &t.cen),
            KernelStable => self.kernel_stable(t),
            LCompact => self.l_compact(),
            ArithmeticL => self
                .kernel_stable(t)
                .and(|| self.dense_everywhere(t, &t.core)),
            CoherentL => self
                .l_compact()
                .and(|| self.kernel_stable(t))
                .and(|| self.dense_everywhere(t, &t.core)),
            StoneL => self
                .l_compact()
                .and(|| self.dense_everywhere(t, &t.cen)),
        }
    }

    /// `op U` dense in `U` for every clopen upset `U`.
    fn dense_everywhere(&self, t: &OperatorTable, op: &[u64]) -> Verdict {
        match t
            .upsets
            .iter()
            .zip(op)
            .find(|&(&u, &o)| !self.dense_in(o, u))
        {
            None => Verdict::TRUE,
            Some((&u, _)) => Verdict::fail(Witness::Set(u)),
        }
    }

    fn kernel_stable(&self, t: &OperatorTable) -> Verdict {
        for (i, &u) in t.upsets.iter().enumerate() {
            for (j, &v) in t.upsets.iter().enumerate().skip(i) {
                if self.kernel_mask(u & v) != t.ker[i] & t.ker[j] {
                    return Verdict::fail(Witness::SetPair(u, v));
                }
            }
        }
        Verdict::TRUE
    }

    fn l_compact(&self) -> Verdict {
        let x = self.full_mask();
        if self.kernel_mask(x) == x {
            Verdict::TRUE
        } else {
            Verdict::fail(Witness::Set(x))
        }
    }

    /// The downset of each clopen set is clopen. Quantifies over every
    /// subset, so spaces above `max_points` points are refused.
    pub fn esakia(&self, max_points: usize) -> Result<Verdict> {
        for c in self.all_subsets(max_points)? {
            if self.is_clopen(c) && !self.is_clopen(self.points().down_closure_mask(c)) {
                return Ok(Verdict::fail(Witness::Set(c)));
            }
        }
        Ok(Verdict::TRUE)
    }

    /// The closure of each open upset is open.
    pub fn extremally_order_disconnected(&self) -> Verdict {
        match self.open_upsets().find(|&u| !self.is_open(self.closure(u))) {
            None => Verdict::TRUE,
            Some(u) => Verdict::fail(Witness::Set(u)),
        }
    }
}
