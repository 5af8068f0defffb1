//! Seeded batch verifications with JSON reports.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::checks::{
    check_induction_compat, check_jordan_compat, check_stratification, construct_in_class, construct_random,
    in_etale_locus, random_group_element, Constructed,
};
use super::map::{etale_certificate, LogLikeMap, MapKind};
use super::sp4;
use crate::error::{Error, Result};
use crate::exactnum::centralizer::matrix_centralizer_dim;
use crate::exactnum::jordan::multiplicative_jordan;
use crate::exactnum::matrix::ExactMatrix;
use crate::exactnum::sample::{random_matrix, random_nonzero, rng, SampleRng};
use crate::jclass::{enumerate_classes, levi_shapes, Mode};
use crate::oracle::roots::closure_root_count;

/// Witnesses kept per report.
pub const WITNESS_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub reference: String,
    pub samples: usize,
    pub failures: usize,
    pub witnesses: Vec<Value>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    LemSs,
    PropRespect,
    EtaleCover,
    InductionCompat,
    Sp4Torus,
    Equivariance,
}

impl Claim {
    pub const ALL: [Claim; 6] = [
        Claim::LemSs,
        Claim::PropRespect,
        Claim::EtaleCover,
        Claim::InductionCompat,
        Claim::Sp4Torus,
        Claim::Equivariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::LemSs => "lem-ss",
            Claim::PropRespect => "prop-respect",
            Claim::EtaleCover => "etale-cover",
            Claim::InductionCompat => "induction-compat",
            Claim::Sp4Torus => "sp4-torus",
            Claim::Equivariance => "equivariance",
        }
    }

    pub fn reference(self) -> &'static str {
        match self {
            Claim::LemSs => "semisimple part of lambda(su) equals lambda(s); lambda(u) is nilpotent",
            Claim::PropRespect => "same-pattern elements of the etale locus have same-pattern images",
            Claim::EtaleCover => "R(x) != 0 iff the fiber over x has n points",
            Claim::InductionCompat => "lambda commutes with induction from Levi subgroups",
            Claim::Sp4Torus => "lambda(diag(a,b,1/a,1/b)) = diag(a-1/a, b-1/b, 1/a-a, 1/b-b)/2",
            Claim::Equivariance => "lambda(h g h^-1) = h lambda(g) h^-1 and dim C(g) <= dim C(lambda(g))",
        }
    }
}

impl std::str::FromStr for Claim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Claim> {
        Claim::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Claim::ALL.iter().map(|c| c.name()).collect();
            Error::Parse(format!("unknown claim {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub map: MapKind,
    pub n: usize,
    pub p: u64,
    pub samples: usize,
    pub seed: u64,
}

/// Independent stream for sample `i`, so parallel runs are reproducible.
fn sample_rng(seed: u64, i: usize) -> SampleRng {
    rng(seed ^ (i as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Runs `check` on every sample index; `Some(witness)` marks a failure.
fn run_batch(
    claim: Claim,
    samples: usize,
    check: impl Fn(usize) -> Result<Option<Value>> + Sync + Send,
) -> Result<VerificationReport> {
    let outcomes: Vec<Option<Value>> = (0..samples).into_par_iter().map(check).collect::<Result<_>>()?;
    let failures: Vec<Value> = outcomes.into_iter().flatten().collect();
    Ok(VerificationReport {
        claim: claim.name().into(),
        reference: claim.reference().into(),
        samples,
        failures: failures.len(),
        witnesses: failures.into_iter().take(WITNESS_CAP).collect(),
    })
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Rejection-samples a constructed element inside the étale locus.
fn construct_in_locus(
    map: &LogLikeMap,
    sample: impl Fn(&mut SampleRng) -> Result<Constructed>,
    rng: &mut SampleRng,
) -> Result<Constructed> {
    for _ in 0..10_000 {
        let c = sample(rng)?;
        if in_etale_locus(map, &c.g)? {
            return Ok(c);
        }
    }
    Err(Error::OutsideEtaleLocus("no sample landed in the locus".into()))
}

pub fn verify(claim: Claim, opts: &VerifyOptions) -> Result<VerificationReport> {
    let map = LogLikeMap::new(opts.map, opts.n, opts.p)?;
    let classes = match map.kind {
        MapKind::Sp4Cayley => Vec::new(),
        _ => enumerate_classes(map.n, Mode::Group)?,
    };
    let seed = opts.seed;
    match claim {
        Claim::LemSs => run_batch(claim, opts.samples, |i| {
            let mut r = sample_rng(seed, i);
            let c = construct_in_locus(&map, |r| construct_random(&map, &classes, r), &mut r)?;
            let report = check_jordan_compat(&map, &c.g)?;
            let (s, u) = multiplicative_jordan(&c.g)?;
            let ok = report.holds() && s == c.s && u == c.u;
            Ok((!ok).then(|| json!({ "g": to_value(&c.g), "report": to_value(&report) })))
        }),
        Claim::PropRespect => run_batch(claim, opts.samples, |i| {
            let mut r = sample_rng(seed, i);
            let (g1, g2) = match map.kind {
                MapKind::Sp4Cayley => {
                    let c = construct_in_locus(&map, |r| construct_random(&map, &classes, r), &mut r)?;
                    let (h, inv) = random_group_element(&map, &mut r);
                    let g2 = &(&h * &c.g) * &inv;
                    (c.g, g2)
                }
                _ => {
                    let class = &classes[i % classes.len()];
                    let c1 = construct_in_locus(&map, |r| construct_in_class(&map, class, r), &mut r)?;
                    let c2 = construct_in_locus(&map, |r| construct_in_class(&map, class, r), &mut r)?;
                    (c1.g, c2.g)
                }
            };
            let ok = check_stratification(&map, &g1, &g2)?;
            Ok((!ok).then(|| json!({ "g1": to_value(&g1), "g2": to_value(&g2) })))
        }),
        Claim::EtaleCover => {
            if map.kind != MapKind::SlTraceShift {
                return Err(Error::Characteristic("the etale covering is checked for the SL map".into()));
            }
            let field = map.field();
            let n = map.n;
            run_batch(claim, opts.samples, |i| {
                let mut r = sample_rng(seed, i);
                // Sample 0 is the fiber over 0, the centre.
                let mut x = if i == 0 { ExactMatrix::zero(field, n) } else { random_matrix(field, n, &mut r) };
                let rest = &x.trace() - x.get(n - 1, n - 1);
                x.set(n - 1, n - 1, -&rest);
                let cert = etale_certificate(n, map.p, &x)?;
                let coeffs: Option<Vec<u64>> =
                    super::map::fiber_polynomial(&x).coeffs().iter().map(|c| c.residue().map(u64::from)).collect();
                let oracle = coeffs.and_then(|c| closure_root_count(&c, map.p));
                let ok = cert.in_locus == (cert.fiber_size == n)
                    && oracle.is_none_or(|k| k == cert.fiber_size)
                    && (i != 0 || cert.fiber_size == n);
                Ok((!ok).then(|| json!({ "certificate": to_value(&cert), "oracle": oracle })))
            })
        }
        Claim::InductionCompat => {
            if map.kind != MapKind::GlShift {
                return Err(Error::Characteristic("induction is checked for the GL map".into()));
            }
            let shapes: Vec<_> = (1..=map.n).flat_map(levi_shapes).collect();
            run_batch(claim, shapes.len(), |i| {
                let ok = check_induction_compat(&map, &shapes[i])?;
                Ok((!ok).then(|| to_value(&shapes[i])))
            })
        }
        Claim::Sp4Torus => {
            if map.kind != MapKind::Sp4Cayley {
                return Err(Error::Characteristic("the torus formula is for the Sp4 map".into()));
            }
            let field = map.field();
            run_batch(claim, opts.samples, |i| {
                let mut r = sample_rng(seed, i);
                let (a, b) = (random_nonzero(field, &mut r), random_nonzero(field, &mut r));
                let t = sp4::torus(field, &a, &b)?;
                let x = map.apply(&t)?;
                let ok = x == sp4::torus_formula(field, &a, &b)? && map.in_lie_algebra(&x);
                Ok((!ok).then(|| json!({ "a": a.to_string(), "b": b.to_string() })))
            })
        }
        Claim::Equivariance => {
            let ambient = map.ambient();
            run_batch(claim, opts.samples, |i| {
                let mut r = sample_rng(seed, i);
                let g = construct_random(&map, &classes, &mut r)?.g;
                let (h, inv) = random_group_element(&map, &mut r);
                let x = map.apply(&g)?;
                let lhs = map.apply(&(&(&h * &g) * &inv))?;
                let rhs = &(&h * &x) * &inv;
                let ok = lhs == rhs
                    && map.in_lie_algebra(&x)
                    && matrix_centralizer_dim(&g, ambient)? <= matrix_centralizer_dim(&x, ambient)?;
                Ok((!ok).then(|| json!({ "g": to_value(&g), "h": to_value(&h) })))
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(map: MapKind, n: usize, p: u64, samples: usize) -> VerifyOptions {
        VerifyOptions { map, n, p, samples, seed: 7 }
    }

    #[test]
    fn small_batches_pass() {
        let cases = [
            (Claim::LemSs, opts(MapKind::GlShift, 3, 101, 30)),
            (Claim::LemSs, opts(MapKind::SlTraceShift, 3, 7, 30)),
            (Claim::LemSs, opts(MapKind::Sp4Cayley, 4, 5, 30)),
            (Claim::PropRespect, opts(MapKind::GlShift, 3, 101, 30)),
            (Claim::PropRespect, opts(MapKind::SlTraceShift, 3, 7, 30)),
            (Claim::EtaleCover, opts(MapKind::SlTraceShift, 2, 5, 50)),
            (Claim::InductionCompat, opts(MapKind::GlShift, 3, 101, 0)),
            (Claim::Sp4Torus, opts(MapKind::Sp4Cayley, 4, 3, 30)),
            (Claim::Equivariance, opts(MapKind::SlTraceShift, 3, 7, 30)),
            (Claim::Equivariance, opts(MapKind::Sp4Cayley, 4, 7, 30)),
        ];
        for (claim, o) in cases {
            let r = verify(claim, &o).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn deterministic() {
        let o = opts(MapKind::GlShift, 3, 101, 20);
        assert_eq!(verify(Claim::LemSs, &o).unwrap(), verify(Claim::LemSs, &o).unwrap());
    }

    #[test]
    fn gates() {
        assert!(verify(Claim::EtaleCover, &opts(MapKind::GlShift, 2, 5, 1)).is_err());
        assert!(verify(Claim::Sp4Torus, &opts(MapKind::GlShift, 4, 5, 1)).is_err());
        assert!("nope".parse::<Claim>().is_err());
        assert_eq!("lem-ss".parse::<Claim>().unwrap(), Claim::LemSs);
    }
}
