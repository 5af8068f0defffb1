use std::sync::Arc;

use jordan_strata::oracle::levi::{conjugate_to_standard_levi, is_closed, symmetric_subsets};
use jordan_strata::rootcore::{
    centralizer_subsystem, classify_prime, is_rationally_closed, pseudo_levis, rational_closure, RootSystem, Subsystem,
    TorusElement,
};
use proptest::prelude::*;

fn system(label: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::from_label(label).unwrap())
}

#[test]
fn rational_closure_matches_weyl_search_rank_three() {
    for label in ["A2", "A3", "B3", "C3", "A1xB2", "A1xA1xA1"] {
        let rs = system(label);
        for set in symmetric_subsets(&rs) {
            if !is_closed(&rs, &set) {
                continue;
            }
            let psi = Subsystem::new(rs.clone(), set.iter().copied()).unwrap();
            assert_eq!(is_rationally_closed(&psi), conjugate_to_standard_levi(&rs, &set), "{label} {set:?}");
        }
    }
}

#[test]
fn simple_subsets_generate_levis() {
    for label in ["A3", "B3", "C3", "D4", "G2", "F4"] {
        let rs = system(label);
        let simple = rs.simple_indices();
        for mask in 0u32..(1 << simple.len()) {
            let gens: Vec<usize> = (0..simple.len()).filter(|&i| mask >> i & 1 == 1).map(|i| simple[i]).collect();
            assert!(is_rationally_closed(&Subsystem::generated_by(rs.clone(), &gens)), "{label} {gens:?}");
        }
    }
}

#[test]
fn primes_depend_only_on_components() {
    for p in [2, 3, 5, 7] {
        for (a, b) in [("A1xG2", "G2xA1"), ("B3xC2", "C2xB3"), ("E6xA2", "A2xE6")] {
            let (x, y) = (RootSystem::from_label(a).unwrap(), RootSystem::from_label(b).unwrap());
            assert_eq!(classify_prime(&x, p, None).unwrap(), classify_prime(&y, p, None).unwrap());
        }
        let b2 = classify_prime(&RootSystem::from_label("B2").unwrap(), p, None).unwrap();
        let c2 = classify_prime(&RootSystem::from_label("C2").unwrap(), p, None).unwrap();
        assert_eq!(b2, c2);
    }
}

#[test]
fn pseudo_levis_are_closed_and_flagged() {
    for label in ["A2", "C2", "G2", "B3"] {
        let rs = system(label);
        for pl in pseudo_levis(&rs).unwrap() {
            assert!(pl.subsystem.is_symmetric() && pl.subsystem.is_additively_closed());
            assert_eq!(pl.rationally_closed, is_rationally_closed(&pl.subsystem));
            assert_eq!(centralizer_subsystem(&rs, &pl.witness).unwrap(), pl.subsystem);
        }
    }
}

fn labels() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn centralizers_are_closed(label in labels(), nums in prop::collection::vec(0i64..12, 4), den in 1i64..13, p in prop::sample::select(vec![0u64, 5, 7, 11, 13])) {
        let rs = system(label);
        prop_assume!(p == 0 || den % p as i64 != 0);
        let angles: Vec<(i64, i64)> = nums.iter().take(rs.rank()).map(|&a| (a, den)).collect();
        let s = TorusElement::from_angles(&angles, p).unwrap();
        let phi = centralizer_subsystem(&rs, &s).unwrap();
        prop_assert!(phi.is_symmetric() && phi.is_additively_closed());
    }

    #[test]
    fn closure_is_idempotent_and_extensive(label in labels(), gens in prop::collection::vec(any::<prop::sample::Index>(), 0..3)) {
        let rs = system(label);
        let gens: Vec<usize> = gens.iter().map(|i| i.index(rs.num_roots())).collect();
        let psi = Subsystem::generated_by(rs, &gens);
        let closure = rational_closure(&psi);
        prop_assert!(psi.is_subset(&closure));
        prop_assert!(is_rationally_closed(&closure));
        prop_assert_eq!(rational_closure(&closure), closure);
    }
}
