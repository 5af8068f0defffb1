use std::path::PathBuf;

use jordan_strata::exactnum::sample::rng;
use jordan_strata::jclass::{
    closure_contains, dim_orbit, enumerate_classes, induce, levi_shapes, local_data, regular_closure_contains,
    ClassDatum, ClassPoset, Mode,
};
use jordan_strata::oracle::modp::{jordan_type, rank, shift};
use jordan_strata::oracle::nilradical::sample_parabolic;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden/v1").join(name)
}

fn classes(n: usize) -> Vec<ClassDatum> {
    enumerate_classes(n, Mode::Liealg).unwrap()
}

#[test]
fn closure_is_transitive() {
    for n in 1..=4 {
        let cs = classes(n);
        for a in &cs {
            for b in &cs {
                if !closure_contains(b, a).unwrap() {
                    continue;
                }
                for c in &cs {
                    if closure_contains(c, b).unwrap() {
                        assert!(closure_contains(c, a).unwrap(), "{a} < {b} < {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn regular_closure_keeps_orbit_dimension() {
    for n in 1..=4 {
        let cs = classes(n);
        for j in &cs {
            for p in &cs {
                if regular_closure_contains(j, p).unwrap() {
                    assert!(closure_contains(j, p).unwrap());
                    assert_eq!(dim_orbit(p), dim_orbit(j), "{j} ∋ {p}");
                }
            }
        }
    }
}

#[test]
fn open_neighbourhoods_are_up_sets() {
    for n in 1..=4 {
        let cs = classes(n);
        for x in &cs {
            for j in cs.iter().filter(|j| closure_contains(j, x).unwrap()) {
                for k in cs.iter().filter(|k| closure_contains(k, j).unwrap()) {
                    assert!(closure_contains(k, x).unwrap(), "{x} {j} {k}");
                }
            }
        }
    }
}

#[test]
fn local_data_at_generic_point_is_trivial() {
    for n in 1..=5 {
        for j in classes(n) {
            let families = local_data(&j, &j).unwrap();
            assert_eq!(families.len(), 1, "{j}");
            assert!(families[0].iter().all(|b| b.class.r() == 1));
        }
    }
}

#[test]
fn induce_dominates_sampled_types() {
    let mut r = rng(11);
    for n in 1..=5 {
        for ls in levi_shapes(n) {
            let lambda = induce(&ls);
            assert_eq!(lambda.size(), n);
            for _ in 0..10 {
                let x = sample_parabolic(&ls, 101, &mut r);
                let mu = jordan_type(&x, 1, 101);
                assert!(mu.dominated_by(&lambda), "{ls:?}: {mu} vs {lambda}");
                assert!(rank(&shift(&x, 1, 101), 101) <= n - lambda.len());
            }
        }
    }
}

#[test]
fn poset_matches_golden() {
    for mode in [Mode::Liealg, Mode::Group] {
        let text = std::fs::read_to_string(golden(&format!("poset_{mode}_3.json"))).unwrap();
        let frozen: ClassPoset = serde_json::from_str(&text).unwrap();
        let built = ClassPoset::build(3, mode).unwrap();
        assert_eq!(built, frozen);
        assert_eq!(built.hasse().len(), 6);
        assert!(built.is_partial_order());
    }
}

#[test]
fn local_data_matches_golden() {
    let text = std::fs::read_to_string(golden("local_data_gl4.json")).unwrap();
    let frozen: serde_json::Value = serde_json::from_str(&text).unwrap();
    let j = ClassDatum::from_parts(Mode::Liealg, &[(1, &[1]), (1, &[1]), (2, &[1, 1])]).unwrap();
    let p = ClassDatum::from_parts(Mode::Liealg, &[(2, &[2]), (2, &[1, 1])]).unwrap();
    let families = local_data(&j, &p).unwrap();
    assert_eq!(frozen["size"], families.len());
    assert_eq!(frozen["families"], serde_json::to_value(&families).unwrap());
}

#[test]
fn class_serialization_round_trips() {
    for n in 1..=4 {
        for mode in [Mode::Group, Mode::Liealg] {
            for c in enumerate_classes(n, mode).unwrap() {
                let text = serde_json::to_string(&c).unwrap();
                assert_eq!(serde_json::from_str::<ClassDatum>(&text).unwrap(), c);
            }
        }
    }
    assert!(serde_json::from_str::<ClassDatum>(r#"{"n":3,"mode":"liealg","slots":[[2,[2]]]}"#).is_err());
}
