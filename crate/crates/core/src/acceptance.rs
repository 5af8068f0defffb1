//! The acceptance suite: eleven criteria, each checked against an
//! independent oracle or an exhaustive enumeration.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactnum::sample::rng;
use crate::jclass::{
    closure_contains, dim_class, enumerate_classes, has_rigid_orbit_data, induce, is_closure_normal_gl, levi_shapes,
    regular_closure_contains, sheets, Mode,
};
use crate::loglike::{sl2_char2_report, sp4_isolated_report, verify, Claim, MapKind, VerifyOptions};
use crate::oracle::finite::{brute_force_counts, class_point_count, estimate_degree, interpolated_degree};
use crate::oracle::levi::{conjugate_to_standard_levi, is_closed, symmetric_subsets};
use crate::oracle::nilradical::sampled_induced_type;
use crate::oracle::primes::prime_truth;
use crate::oracle::specialize::closure_by_specialization;
use crate::partition::Partition;
use crate::rootcore::{classify_prime, is_rationally_closed, RootSystem, Subsystem};

/// Seed of every sampled criterion.
pub const SEED: u64 = 7;

/// `(short name, statement)` of each criterion, in order.
pub const CRITERIA: [(&str, &str); 11] = [
    ("prime-tables", "good, very good, torsion and bad primes match root-datum truth tables"),
    ("rational-closure", "rational closure agrees with Weyl conjugacy to standard Levi subsystems"),
    ("induction", "induced orbits equal the generic Jordan type of u + nilradical"),
    ("classes-closure", "class counts and closures match brute force and explicit degenerations"),
    ("dimension", "class dimensions equal the growth degree of F_q point counts"),
    ("jordan-compat", "log-like maps respect Jordan decomposition and Jordan patterns"),
    ("etale-cover", "the SL_n trace shift is n:1 exactly where R is nonzero"),
    ("sp4-isolated", "Sp4 torus formula and the isolated element diag(1,-1,1,-1)"),
    ("normality", "closure normality predicate and rigid data of sheets"),
    ("sheets", "sheets are counted by partitions and their regular closures are disjoint"),
    ("sl2-char2", "sl2 in characteristic 2 over F_4"),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub index: usize,
    pub name: String,
    pub statement: String,
    pub passed: bool,
    pub detail: String,
    /// Wall time; left out of serialized output so reports are reproducible.
    #[serde(skip)]
    pub millis: u128,
}

fn prime_tables() -> Result<(bool, String)> {
    let labels = [
        "A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "E6", "E7", "E8",
        "F4", "G2",
    ];
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for label in labels {
        let rs = RootSystem::from_label(label)?;
        for p in [2, 3, 5, 7] {
            for pi1 in [None, Some(2), Some(3)] {
                let v = classify_prime(&rs, p, pi1)?;
                let t = prime_truth(&rs, p, pi1);
                checked += 1;
                if (v.good, v.very_good, v.torsion, v.bad) != (t.good, t.very_good, t.torsion, !t.good) {
                    mismatches.push(format!("{label}/{p}/{pi1:?}"));
                }
            }
        }
    }
    let e8 = classify_prime(&RootSystem::from_label("E8")?, 5, None)?;
    let a3 = classify_prime(&RootSystem::from_label("A3")?, 2, None)?;
    let anchors = e8.bad && e8.torsion && a3.good && !a3.very_good;
    Ok((
        mismatches.is_empty() && anchors,
        format!("{checked} verdicts, mismatches {mismatches:?}, E8/5 and A3/2 anchors {anchors}"),
    ))
}

fn rational_closure_criterion() -> Result<(bool, String)> {
    let mut detail = Vec::new();
    let mut ok = true;
    for label in ["C2", "G2"] {
        let rs = Arc::new(RootSystem::from_label(label)?);
        let subsets = symmetric_subsets(&rs);
        let mut closed = 0;
        let mut disagree = 0;
        for set in &subsets {
            if !is_closed(&rs, set) {
                continue;
            }
            closed += 1;
            let psi = Subsystem::new(rs.clone(), set.iter().copied())?;
            if is_rationally_closed(&psi) != conjugate_to_standard_levi(&rs, set) {
                disagree += 1;
            }
        }
        ok &= disagree == 0;
        detail.push(format!("{label}: {} subsets, {closed} closed, {disagree} disagreements", subsets.len()));
    }
    let c2 = Arc::new(RootSystem::from_label("C2")?);
    let long: Vec<usize> = (0..c2.num_roots()).filter(|&i| c2.is_long(i)).collect();
    let long_a1a1 = Subsystem::new(c2, long)?;
    let anchor = long_a1a1.type_label() == "A1xA1" && !is_rationally_closed(&long_a1a1);
    detail.push(format!("long A1xA1 in C2 not rationally closed: {anchor}"));
    Ok((ok && anchor, detail.join("; ")))
}

fn induction_criterion() -> Result<(bool, String)> {
    let shapes: Vec<_> = (1..=5).flat_map(levi_shapes).collect();
    let failures: Vec<String> = shapes
        .par_iter()
        .enumerate()
        .filter_map(|(i, ls)| {
            let mut r = rng(SEED + i as u64);
            let sampled = sampled_induced_type(ls, 101, 50, &mut r);
            (sampled.as_ref() != Some(&induce(ls))).then(|| format!("{:?}", ls.parts))
        })
        .collect();
    Ok((
        failures.is_empty(),
        format!("{} Levi shapes, 50 samples each over F_101, failures {:?}", shapes.len(), failures),
    ))
}

fn classes_closure_criterion() -> Result<(bool, String)> {
    let mut ok = true;
    let mut counts = Vec::new();
    for n in 1..=3 {
        let brute: BTreeSet<_> = brute_force_counts(n, 5).into_keys().collect();
        let listed: BTreeSet<_> = enumerate_classes(n, Mode::Liealg)?.into_iter().collect();
        ok &= brute == listed;
        counts.push(format!("{}/{}", listed.len(), brute.len()));
    }
    let mut r = rng(SEED);
    let per_n: Vec<_> = (1..=4).map(|n| enumerate_classes(n, Mode::Liealg)).collect::<Result<_>>()?;
    let mut disagree = 0;
    let mut contained = 0;
    for _ in 0..100 {
        let classes = &per_n[r.gen_range(0..4)];
        let j = classes.choose(&mut r).expect("nonempty");
        let p = classes.choose(&mut r).expect("nonempty");
        let fast = closure_contains(j, p)?;
        contained += usize::from(fast);
        if fast != closure_by_specialization(j, p, 3, &mut r) {
            disagree += 1;
        }
    }
    ok &= disagree == 0;
    Ok((
        ok,
        format!(
            "enumerated/brute-force counts over F_5: {}; 100 closure pairs ({contained} contained), {disagree} disagreements",
            counts.join(", ")
        ),
    ))
}

fn dimension_criterion() -> Result<(bool, String)> {
    let mut ok = true;
    let mut checked = 0;
    let mut notes = Vec::new();
    for n in 2..=3 {
        let classes = enumerate_classes(n, Mode::Liealg)?;
        let brute = brute_force_counts(n, 5);
        for q in [5u64, 7, 11] {
            let total: BigInt = classes.iter().map(|d| class_point_count(d, q)).sum();
            if total != BigInt::from(q).pow((n * n) as u32) {
                ok = false;
                notes.push(format!("gl{n} counts at q={q} do not sum to q^{}", n * n));
            }
        }
        for d in &classes {
            checked += 1;
            let pts: [(u64, BigInt); 3] = [5, 7, 11].map(|q| (q, class_point_count(d, q)));
            if brute.get(d).map(|&c| BigInt::from(c)) != Some(pts[0].1.clone()) {
                ok = false;
                notes.push(format!("{d}: N(5) differs from brute force"));
            }
            let estimate = estimate_degree(&pts);
            let exact_pts: Vec<(u64, BigInt)> =
                [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37].iter().map(|&q| (q, class_point_count(d, q))).collect();
            let exact = interpolated_degree(&exact_pts);
            let dim = dim_class(d);
            if estimate.round() as usize != dim || exact != dim {
                ok = false;
                notes.push(format!("{d}: dim {dim}, estimate {estimate:.3}, interpolated {exact}"));
            }
        }
    }
    Ok((
        ok,
        format!(
            "{checked} classes of gl2 and gl3 at q = 5, 7, 11; {}",
            if notes.is_empty() { "all degrees match".into() } else { notes.join("; ") }
        ),
    ))
}

fn report_line(reports: &[crate::loglike::VerificationReport]) -> (bool, String) {
    let ok = reports.iter().all(|r| r.passed());
    let detail = reports
        .iter()
        .map(|r| format!("{} {}/{} failed", r.claim, r.failures, r.samples))
        .collect::<Vec<_>>()
        .join(", ");
    (ok, detail)
}

fn jordan_compat_criterion() -> Result<(bool, String)> {
    let gl = |s| VerifyOptions { map: MapKind::GlShift, n: 4, p: 101, samples: s, seed: SEED };
    let sl = |s| VerifyOptions { map: MapKind::SlTraceShift, n: 3, p: 7, samples: s, seed: SEED };
    let reports = vec![
        verify(Claim::LemSs, &gl(1000))?,
        verify(Claim::PropRespect, &gl(1000))?,
        verify(Claim::LemSs, &sl(500))?,
        verify(Claim::PropRespect, &sl(500))?,
    ];
    Ok(report_line(&reports))
}

fn etale_criterion() -> Result<(bool, String)> {
    let mut reports = Vec::new();
    for n in [2, 3] {
        for p in [5, 7, 11] {
            let opts = VerifyOptions { map: MapKind::SlTraceShift, n, p, samples: 500, seed: SEED };
            reports.push(verify(Claim::EtaleCover, &opts)?);
        }
    }
    let (ok, _) = report_line(&reports);
    let failures: usize = reports.iter().map(|r| r.failures).sum();
    Ok((ok, format!("6 cases of 500 samples, fiber over 0 included, {failures} failures")))
}

fn sp4_criterion() -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for p in [3, 5, 7] {
        let opts = VerifyOptions { map: MapKind::Sp4Cayley, n: 4, p, samples: 100, seed: SEED };
        let torus = verify(Claim::Sp4Torus, &opts)?;
        let iso = sp4_isolated_report(p)?;
        ok &= torus.passed() && iso.holds();
        detail.push(format!(
            "p={p}: torus {}/100 failed, orbit dim {} vs image {}, Phi_s {} closed={} closure {}",
            torus.failures,
            iso.orbit_dim,
            iso.image_orbit_dim,
            iso.phi_s_type,
            iso.phi_s_rationally_closed,
            iso.closure_type
        ));
    }
    Ok((ok, detail.join("; ")))
}

fn normality_criterion() -> Result<(bool, String)> {
    let mut ok = true;
    let mut checked = 0;
    for n in 1..=6 {
        for j in enumerate_classes(n, Mode::Group)? {
            checked += 1;
            let distinct: BTreeSet<_> = j.slots().iter().collect();
            ok &= is_closure_normal_gl(&j)? == (distinct.len() == 1);
        }
        ok &= sheets(n, Mode::Group)?.iter().all(has_rigid_orbit_data);
    }
    Ok((ok, format!("{checked} classes for n <= 6; sheets carry zero orbits: {ok}")))
}

fn sheets_criterion() -> Result<(bool, String)> {
    let mut ok = true;
    let mut counts = Vec::new();
    for n in 1..=6 {
        let s = sheets(n, Mode::Liealg)?;
        ok &= s.len() == Partition::count(n);
        counts.push(s.len().to_string());
        if n <= 4 {
            let classes = enumerate_classes(n, Mode::Liealg)?;
            for (a, j1) in s.iter().enumerate() {
                for j2 in &s[a + 1..] {
                    for p in &classes {
                        if regular_closure_contains(j1, p)? && regular_closure_contains(j2, p)? {
                            ok = false;
                        }
                    }
                }
            }
        }
    }
    Ok((ok, format!("sheet counts {} for n = 1..6; regular closures disjoint for n <= 4", counts.join(", "))))
}

fn sl2_criterion() -> Result<(bool, String)> {
    let r = sl2_char2_report();
    let f4 = &r.fields[1];
    Ok((
        r.holds(),
        format!(
            "{} elements, ad^3 = 0: {}, centre = scalars: {}, orbit dims {:?}",
            f4.elements, f4.ad_cubed_zero, f4.center_is_scalars, f4.orbit_dims
        ),
    ))
}

/// Runs criterion `index` (1-based).
pub fn run(index: usize) -> Outcome {
    let start = Instant::now();
    let result = match index {
        1 => prime_tables(),
        2 => rational_closure_criterion(),
        3 => induction_criterion(),
        4 => classes_closure_criterion(),
        5 => dimension_criterion(),
        6 => jordan_compat_criterion(),
        7 => etale_criterion(),
        8 => sp4_criterion(),
        9 => normality_criterion(),
        10 => sheets_criterion(),
        11 => sl2_criterion(),
        _ => panic!("criteria are numbered 1 to {}", CRITERIA.len()),
    };
    let (passed, detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
    let (name, statement) = CRITERIA[index - 1];
    Outcome {
        index,
        name: name.into(),
        statement: statement.into(),
        passed,
        detail,
        millis: start.elapsed().as_millis(),
    }
}

pub fn run_all() -> Vec<Outcome> {
    (1..=CRITERIA.len()).map(run).collect()
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:>2} {:<17} {}  {}", self.index, self.name, if self.passed { "PASS" } else { "FAIL" }, self.detail)
    }
}
