use jordan_strata::exactnum::centralizer::in_sp_lie;
use jordan_strata::exactnum::poly::total_multiplicity;
use jordan_strata::exactnum::sample::{random_matrix, rng};
use jordan_strata::exactnum::{ExactMatrix, Field};
use jordan_strata::jclass::{enumerate_classes, Mode};
use jordan_strata::loglike::checks::{construct_random, random_group_element};
use jordan_strata::loglike::map::fiber_polynomial;
use jordan_strata::loglike::{
    etale_certificate, minimal_levi_survey, verify, Claim, LogLikeMap, MapKind, VerifyOptions,
};
use proptest::prelude::*;

fn maps() -> Vec<LogLikeMap> {
    vec![
        LogLikeMap::gl(3, 101).unwrap(),
        LogLikeMap::gl(4, 7).unwrap(),
        LogLikeMap::sl(3, 7).unwrap(),
        LogLikeMap::sl(2, 11).unwrap(),
        LogLikeMap::sp4(5).unwrap(),
        LogLikeMap::sp4(7).unwrap(),
    ]
}

#[test]
fn equivariance_and_image() {
    for map in maps() {
        let classes = match map.kind {
            MapKind::Sp4Cayley => Vec::new(),
            _ => enumerate_classes(map.n, Mode::Group).unwrap(),
        };
        let mut r = rng(3);
        for _ in 0..40 {
            let g = construct_random(&map, &classes, &mut r).unwrap().g;
            let (h, inv) = random_group_element(&map, &mut r);
            let x = map.apply(&g).unwrap();
            assert!(map.in_lie_algebra(&x));
            if map.kind == MapKind::Sp4Cayley {
                assert!(in_sp_lie(&x));
            }
            assert_eq!(map.apply(&(&(&h * &g) * &inv)).unwrap(), &(&h * &x) * &inv);
        }
    }
}

#[test]
fn batch_claims_pass() {
    for (claim, map, n, p) in [
        (Claim::Equivariance, MapKind::GlShift, 4, 101),
        (Claim::Equivariance, MapKind::Sp4Cayley, 4, 5),
        (Claim::InductionCompat, MapKind::GlShift, 5, 101),
        (Claim::LemSs, MapKind::Sp4Cayley, 4, 7),
        (Claim::PropRespect, MapKind::Sp4Cayley, 4, 7),
    ] {
        let report = verify(claim, &VerifyOptions { map, n, p, samples: 100, seed: 1 }).unwrap();
        assert!(report.passed(), "{report:?}");
    }
}

#[test]
fn rejects_bad_characteristic() {
    assert!(LogLikeMap::sl(2, 2).is_err());
    assert!(LogLikeMap::sl(3, 3).is_err());
    assert!(LogLikeMap::sp4(2).is_err());
    assert!(LogLikeMap::new(MapKind::Sp4Cayley, 6, 5).is_err());
    let map = LogLikeMap::sl(2, 5).unwrap();
    let f = Field::new(5).unwrap();
    assert!(map.apply(&ExactMatrix::scalar(f, 2, &f.from_i64(2))).is_err());
}

#[test]
fn minimal_levi_agrees_inside_locus() {
    for p in [5, 7, 11] {
        let s = minimal_levi_survey(p, 3).unwrap();
        assert_eq!(s.elements, ((p - 1) * (p - 1)) as usize);
        assert_eq!(s.torus_matches_matrix, s.elements);
        assert_eq!(s.disagree_in_locus, 0);
        // Over F_5, b = -1/a forces a = ±b, so nothing disagrees there.
        assert_eq!(s.disagree_off_locus > 0, p != 5);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gl_shift_round_trips(seed in any::<u64>(), n in 1usize..=4) {
        let map = LogLikeMap::gl(n, 101).unwrap();
        let mut r = rng(seed);
        let x = random_matrix(map.field(), n, &mut r);
        let one = map.field().one();
        prop_assume!(!x.shift(&-&one).det().is_zero());
        let g = map.gl_inverse(&x).unwrap();
        prop_assert_eq!(map.apply(&g).unwrap(), x);
    }

    #[test]
    fn fiber_size_matches_root_search(seed in any::<u64>(), n in 2usize..=3, p in prop::sample::select(vec![5u64, 7, 11, 13, 101])) {
        let f = Field::new(p).unwrap();
        let mut r = rng(seed);
        let mut x = random_matrix(f, n, &mut r);
        let rest = &x.trace() - x.get(n - 1, n - 1);
        x.set(n - 1, n - 1, -&rest);
        let cert = etale_certificate(n, p, &x).unwrap();
        let roots = fiber_polynomial(&x).roots_in_field();
        // Only split fibers can be counted by search in F_p.
        if total_multiplicity(&roots) == n {
            prop_assert_eq!(roots.len(), cert.fiber_size);
        }
        prop_assert_eq!(cert.in_locus, cert.fiber_size == n);
    }
}
