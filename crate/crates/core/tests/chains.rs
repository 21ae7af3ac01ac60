use std::cmp::Ordering;

use algframe_core::chains::{Block, ChainElt, ChainFrame, ChainPredicate, SEPARATING_CHAINS};
use algframe_core::dlat::FramePredicate;
use proptest::prelude::*;

#[test]
fn finite_chains_agree_with_lattice_oracle() {
    let mut words: Vec<ChainFrame> = vec![ChainFrame::point(), ChainFrame::new(&[]).unwrap()];
    words.extend((1..=4).map(|k| ChainFrame::new(&[Block::Fin(k)]).unwrap()));
    for c in words {
        let l = c.to_lattice().unwrap();
        assert!(l.size() <= 6);
        let prof = l.oracle_profile();
        for p in ChainPredicate::ALL {
            assert_eq!(
                c.predicate(p),
                l.frame_predicate_with(p.frame_predicate(), &prof).holds,
                "{c} {p}"
            );
        }
        // element-level: index 0 is bottom, i + 1 is point i, last is top
        let elt = |i: usize| match i {
            0 => ChainElt::Bottom,
            i if i + 1 == l.size() => c.normalize(ChainElt::Top).unwrap(),
            i => ChainElt::nat(0, i as u64 - 1),
        };
        for a in l.elements() {
            for b in l.elements() {
                assert_eq!(c.way_below(elt(a), elt(b)).unwrap(), prof.holds(a, b));
            }
        }
    }
    assert!(ChainFrame::point().to_lattice().unwrap().frame_predicate(FramePredicate::Stone).holds);
}

#[test]
fn separating_chain_rows_against_oracle() {
    for f in SEPARATING_CHAINS {
        let c = f.frame();
        for p in ChainPredicate::ALL {
            assert_eq!(c.predicate(p), f.expected(p), "{} {p}", f.name);
            assert_eq!(c.predicate_oracle(p).unwrap(), f.expected(p), "{} {p}", f.name);
        }
    }
}

#[test]
fn limits_defeat_self_way_below() {
    for f in SEPARATING_CHAINS {
        let c = f.frame();
        for b in c.landmarks().unwrap() {
            let closed = c.way_below(b, b).unwrap();
            assert_eq!(closed, c.way_below_witness(b, b).unwrap(), "{} {b}", f.name);
            assert_eq!(closed, !c.is_limit(b).unwrap());
        }
    }
}

#[test]
fn interpolation_and_stability_on_fixtures() {
    for f in SEPARATING_CHAINS {
        let c = f.frame();
        let marks = c.landmarks().unwrap();
        for &a in &marks {
            for &b in &marks {
                if a != b && c.way_below(a, b).unwrap() {
                    let m = c.between(a, b).unwrap();
                    if let Some(m) = m {
                        assert!(c.way_below(a, m).unwrap() && c.way_below(m, b).unwrap());
                    } else {
                        // nothing strictly between: b covers a, so b is not a limit
                        assert!(!c.is_limit(b).unwrap());
                    }
                }
                for &d in &marks {
                    if c.way_below(a, b).unwrap() && c.way_below(a, d).unwrap() {
                        assert!(c.way_below(a, c.meet(&[b, d]).unwrap()).unwrap());
                    }
                }
            }
        }
    }
}

fn block() -> impl Strategy<Value = Block> {
    prop_oneof![
        (1u64..4).prop_map(Block::Fin),
        Just(Block::Omega),
        Just(Block::Dense),
    ]
}

fn frame() -> impl Strategy<Value = ChainFrame> {
    prop::collection::vec(block(), 0..5).prop_map(|w| ChainFrame::new(&w).unwrap())
}

proptest! {
    #[test]
    fn landmark_order_is_total(c in frame()) {
        let m = c.landmarks().unwrap();
        for &x in &m {
            for &y in &m {
                let o = c.cmp(x, y).unwrap();
                prop_assert_eq!(o.reverse(), c.cmp(y, x).unwrap());
                prop_assert_eq!(o == Ordering::Equal, x == y);
                prop_assert_eq!(c.meet(&[x, y]).unwrap(), if o == Ordering::Greater { y } else { x });
                prop_assert_eq!(c.join(&[x, y]).unwrap(), if o == Ordering::Greater { x } else { y });
            }
        }
    }

    #[test]
    fn way_below_sandwich(c in frame()) {
        let m = c.landmarks().unwrap();
        for &a in &m {
            for &b in &m {
                let wb = c.way_below(a, b).unwrap();
                prop_assert_eq!(wb, c.way_below_witness(a, b).unwrap());
                if wb {
                    prop_assert!(c.leq(a, b).unwrap());
                    for &x in &m {
                        for &y in &m {
                            if c.leq(x, a).unwrap()
                                && c.leq(b, y).unwrap()
                                && c.is_limit(y).unwrap() == c.is_limit(b).unwrap()
                            {
                                prop_assert!(c.way_below(x, y).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_oracle(c in frame()) {
        for p in ChainPredicate::ALL {
            prop_assert_eq!(c.predicate(p), c.predicate_oracle(p).unwrap(), "{} {}", c, p);
        }
    }

    #[test]
    fn spec_round_trips(c in frame()) {
        prop_assert_eq!(c.spec().parse::<ChainFrame>().unwrap(), c);
    }
}
