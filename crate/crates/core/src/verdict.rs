use alloc::vec::Vec;

/// A counterexample attached to a failed predicate or theorem check.
///
/// Elements and points are indices into the carrier of the object the
/// check ran on; sets are bit masks over the same carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Element(usize),
    Pair(usize, usize),
    Triple(usize, usize, usize),
    Set(u64),
    SetPair(u64, u64),
    Map(Vec<usize>),
    MapAt(Vec<usize>, u64),
}

/// Outcome of evaluating a named predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub const TRUE: Verdict = Verdict {
        holds: true,
        witness: None,
    };

    pub fn fail(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }

    pub fn from_bool(holds: bool) -> Self {
        Verdict {
            holds,
            witness: None,
        }
    }

    /// Conjunction that keeps the first failing witness.
    pub fn and(self, other: impl FnOnce() -> Verdict) -> Verdict {
        if self.holds {
            other()
        } else {
            self
        }
    }
}

impl From<Result<(), Witness>> for Verdict {
    fn from(r: Result<(), Witness>) -> Self {
        match r {
            Ok(()) => Verdict::TRUE,
            Err(w) => Verdict::fail(w),
        }
    }
}
