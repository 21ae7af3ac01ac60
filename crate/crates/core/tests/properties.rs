use algframe_core::dlat::FinDLat;
use algframe_core::duality::{priestley_space_of, round_trip_frame, round_trip_space};
use algframe_core::order::Poset;
use algframe_core::priestley::FinPriestley;
use proptest::prelude::*;

/// A random order on up to six points: pairs `i < j` are related with
/// probability one half, then transitively closed.
fn poset() -> impl Strategy<Value = Poset> {
    (0usize..=6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)))
        .prop_map(|(n, bits)| {
            let mut covers = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        covers.push((i, j));
                    }
                    k += 1;
                }
            }
            Poset::from_covers(n, &covers).unwrap()
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_labels((p, perm) in poset().prop_flat_map(|p| {
        let n = p.size();
        (Just(p), permutation(n))
    })) {
        let q = p.relabel(&perm);
        prop_assert_eq!(p.canonical_form().unwrap(), q.canonical_form().unwrap());
        prop_assert!(p.isomorphic(&q));
    }

    #[test]
    fn upset_lattice_is_distributive_and_dual(p in poset()) {
        let l = FinDLat::birkhoff(&p).unwrap();
        prop_assert!(l.is_distributive());
        let (j, _) = l.birkhoff_poset();
        prop_assert!(j.isomorphic(&p));
        let rec = priestley_space_of(&l).unwrap();
        prop_assert!(rec.space.points().isomorphic(&p));
        round_trip_frame(&l).unwrap();
        round_trip_space(&FinPriestley::new(p).unwrap()).unwrap();
    }

    #[test]
    fn way_below_collapses(p in poset()) {
        let l = FinDLat::birkhoff(&p).unwrap();
        let prof = l.oracle_profile();
        for a in l.elements() {
            for b in l.elements() {
                prop_assert_eq!(prof.holds(a, b), l.leq(a, b));
            }
        }
    }

    #[test]
    fn pseudocomplement_is_largest_disjoint(p in poset()) {
        let l = FinDLat::birkhoff(&p).unwrap();
        for a in l.elements() {
            let s = l.pseudocomplement(a);
            prop_assert_eq!(l.meet(a, s), l.bottom());
            for c in l.elements() {
                if l.meet(a, c) == l.bottom() {
                    prop_assert!(l.leq(c, s));
                }
            }
        }
    }

    #[test]
    fn kernel_forms_agree(p in poset()) {
        let x = FinPriestley::new(p).unwrap();
        for &u in x.clopen_upsets() {
            prop_assert_eq!(x.kernel_mask(u), x.kernel_literal_mask(u));
            prop_assert_eq!(x.is_scott_upset_mask(u), x.is_scott_upset_dagger_mask(u));
        }
        prop_assert_eq!(x.clopen_bisets(), x.clopen_bisets_literal());
    }
}
