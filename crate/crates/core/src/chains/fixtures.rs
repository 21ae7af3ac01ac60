use super::{ChainFrame, ChainPredicate};

/// A chain with the predicates it is expected to satisfy.
#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub word: &'static str,
    pub holds: &'static [ChainPredicate],
}

impl Fixture {
    pub fn frame(&self) -> ChainFrame {
        self.word.parse().expect("fixture words parse")
    }

    pub fn expected(&self, p: ChainPredicate) -> bool {
        self.holds.contains(&p)
    }
}

use ChainPredicate::*;

const CONTINUOUS: [ChainPredicate; 2] = [Continuous, StablyContinuous];

/// One chain per strict inclusion among the frame classes: a Stone chain,
/// a coherent chain that is not Stone, an arithmetic chain that is not
/// coherent, a stably compact chain that is not algebraic, and a stably
/// continuous chain that is not stably compact.
pub const SEPARATING_CHAINS: [Fixture; 5] = [
    Fixture {
        name: "two-element chain",
        word: "empty",
        holds: &ChainPredicate::ALL,
    },
    Fixture {
        name: "five-element chain",
        word: "fin:3",
        holds: &[
            CompactFrame,
            Continuous,
            Algebraic,
            Arithmetic,
            Coherent,
            StablyContinuous,
            StablyCompact,
        ],
    },
    Fixture {
        name: "omega+1",
        word: "omega",
        holds: &[Continuous, Algebraic, Arithmetic, StablyContinuous],
    },
    Fixture {
        name: "unit interval with a successor top",
        word: "dense+fin:1",
        holds: &[CompactFrame, Continuous, StablyContinuous, StablyCompact],
    },
    Fixture {
        name: "unit interval",
        word: "dense",
        holds: &CONTINUOUS,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_match_table() {
        for f in SEPARATING_CHAINS {
            let c = f.frame();
            for p in ChainPredicate::ALL {
                assert_eq!(c.predicate(p), f.expected(p), "{} {p}", f.name);
            }
        }
    }
}
