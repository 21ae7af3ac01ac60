//! Finite-collapse facts and oracle agreement over every upset lattice of
//! a poset with at most five points.

mod common;

use algframe_core::duality::{
    match_records, phi_join_law, priestley_space_of, priestley_space_oracle, round_trip_frame,
    round_trip_space,
};
use algframe_core::priestley::{FinPriestley, MapPredicate};
use algframe_core::Limits;

#[test]
fn corpus_sizes() {
    let counts: Vec<usize> = (0..=5).map(|n| common::posets(n).len()).collect();
    assert_eq!(counts, [1, 2, 4, 9, 25, 88]);
}

#[test]
fn way_below_oracle_is_order() {
    for l in common::corpus(5) {
        let prof = l.oracle_profile();
        for a in l.elements() {
            for b in l.elements() {
                assert_eq!(prof.holds(a, b), l.leq(a, b));
            }
        }
        assert_eq!(prof.compact, l.full_mask());
    }
}

#[test]
fn prime_filter_oracle_matches_fast_path() {
    let mut checked = 0;
    for l in common::corpus(5).into_iter().filter(|l| l.size() <= 16) {
        let oracle = priestley_space_oracle(&l, &Limits::default()).unwrap();
        let fast = priestley_space_of(&l).unwrap();
        match_records(&oracle, &fast).unwrap();
        checked += 1;
    }
    assert!(checked > 40);
}

#[test]
fn round_trips() {
    for (p, l) in common::posets(5).iter().zip(common::corpus(5)) {
        round_trip_frame(&l).unwrap();
        round_trip_space(&FinPriestley::new(p.clone()).unwrap()).unwrap();
        let rec = priestley_space_of(&l).unwrap();
        assert!(rec.space.points().isomorphic(p));
    }
}

#[test]
fn join_law_on_all_subsets() {
    for l in common::corpus(3) {
        let rec = priestley_space_of(&l).unwrap();
        for s in 0..=l.full_mask() {
            assert!(phi_join_law(&rec, s));
        }
    }
}

#[test]
fn operators_collapse() {
    for p in common::posets(5) {
        let x = FinPriestley::new(p).unwrap();
        assert_eq!(x.spatial_mask(), x.full_mask());
        for &u in x.clopen_upsets() {
            assert_eq!(x.kernel_literal_mask(u), u);
            assert_eq!(x.kernel_mask(u), u);
            assert_eq!(x.core_mask(u), u);
        }
    }
}

#[test]
fn every_monotone_map_is_proper_and_coherent() {
    let spaces: Vec<FinPriestley> = common::posets(3)
        .into_iter()
        .map(|p| FinPriestley::new(p).unwrap())
        .collect();
    let tables: Vec<_> = spaces.iter().map(|x| x.operator_table()).collect();
    for (a, ta) in spaces.iter().zip(&tables) {
        for (b, tb) in spaces.iter().zip(&tables) {
            a.for_each_map(b, &Limits::default(), |f| {
                for p in MapPredicate::ALL {
                    assert!(f.predicate_with(p, ta, tb).holds, "{p}");
                }
            })
            .unwrap();
        }
    }
}
