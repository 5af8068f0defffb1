use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::map::LogLikeMap;
use crate::error::{Error, Result};
use crate::exactnum::centralizer::{matrix_centralizer_dim, Ambient};
use crate::exactnum::field::{Field, FieldElem};
use crate::exactnum::matrix::ExactMatrix;
use crate::exactnum::sample::{random_elem, random_nonzero};
use crate::rootcore::{centralizer_subsystem, is_rationally_closed, rational_closure};
use crate::rootcore::{RootSystem, Subsystem, TorusElement};

/// Weights on `(e1, e2)` of the eight roots of `C2`, with root vectors in
/// `sp_4` for the form `J = [[0, I], [-I, 0]]`.
fn weights() -> Vec<([i64; 2], Vec<(usize, usize, i64)>)> {
    vec![
        ([1, -1], vec![(0, 1, 1), (3, 2, -1)]),
        ([-1, 1], vec![(1, 0, 1), (2, 3, -1)]),
        ([1, 1], vec![(0, 3, 1), (1, 2, 1)]),
        ([-1, -1], vec![(2, 1, 1), (3, 0, 1)]),
        ([2, 0], vec![(0, 2, 1)]),
        ([0, 2], vec![(1, 3, 1)]),
        ([-2, 0], vec![(2, 0, 1)]),
        ([0, -2], vec![(3, 1, 1)]),
    ]
}

/// The root system `C2` with `α1 = e1 - e2` short and `α2 = 2e2` long.
pub fn c2() -> Arc<RootSystem> {
    Arc::new(RootSystem::from_label("C2").expect("valid label"))
}

/// Pairs `(root index in C2, root vector)`.
pub fn root_vectors(rs: &RootSystem, field: Field) -> Vec<(usize, ExactMatrix)> {
    weights()
        .into_iter()
        .map(|(w, entries)| {
            // e1 = α1 + α2/2, e2 = α2/2
            let simple = [w[0], (w[0] + w[1]) / 2];
            let idx = rs.index_of(&simple).expect("C2 root");
            let mut x = ExactMatrix::zero(field, 4);
            for (i, j, c) in entries {
                x.set(i, j, field.from_i64(c));
            }
            (idx, x)
        })
        .collect()
}

pub fn torus(field: Field, a: &FieldElem, b: &FieldElem) -> Result<ExactMatrix> {
    let ai = a.inv().ok_or_else(|| Error::NotInGroup("a = 0".into()))?;
    let bi = b.inv().ok_or_else(|| Error::NotInGroup("b = 0".into()))?;
    Ok(ExactMatrix::diag(field, &[a.clone(), b.clone(), ai, bi]))
}

/// `½ diag(a - a⁻¹, b - b⁻¹, a⁻¹ - a, b⁻¹ - b)`, computed entrywise.
pub fn torus_formula(field: Field, a: &FieldElem, b: &FieldElem) -> Result<ExactMatrix> {
    let half = field.from_i64(2).inv().ok_or_else(|| Error::Characteristic("p = 2".into()))?;
    let ai = a.inv().ok_or_else(|| Error::NotInGroup("a = 0".into()))?;
    let bi = b.inv().ok_or_else(|| Error::NotInGroup("b = 0".into()))?;
    Ok(ExactMatrix::diag(field, &[&(a - &ai) * &half, &(b - &bi) * &half, &(&ai - a) * &half, &(&bi - b) * &half]))
}

/// Roots whose root vectors are fixed by `Ad(s)`, for diagonal `s`.
pub fn group_centralizer_roots(rs: &Arc<RootSystem>, s: &ExactMatrix) -> Result<Subsystem> {
    let inv = s.inverse().ok_or_else(|| Error::NotInGroup("singular".into()))?;
    let members: Vec<usize> =
        root_vectors(rs, s.field()).into_iter().filter(|(_, x)| &(s * x) * &inv == *x).map(|(i, _)| i).collect();
    Subsystem::new(rs.clone(), members)
}

/// Roots whose root vectors commute with `x`, for diagonal `x`.
pub fn lie_centralizer_roots(rs: &Arc<RootSystem>, x: &ExactMatrix) -> Result<Subsystem> {
    let members: Vec<usize> =
        root_vectors(rs, x.field()).into_iter().filter(|(_, e)| x.commutator(e).is_zero()).map(|(i, _)| i).collect();
    Subsystem::new(rs.clone(), members)
}

/// A random product of root elements `I + t X_α`, with its inverse.
pub fn random_sp4<R: Rng + ?Sized>(field: Field, factors: usize, rng: &mut R) -> (ExactMatrix, ExactMatrix) {
    let rs = c2();
    let vectors = root_vectors(&rs, field);
    let mut h = ExactMatrix::identity(field, 4);
    let mut inv = ExactMatrix::identity(field, 4);
    for _ in 0..factors {
        let (_, x) = &vectors[rng.gen_range(0..vectors.len())];
        let t = random_elem(field, rng);
        let id = ExactMatrix::identity(field, 4);
        // X_α² = 0, so (I + tX)⁻¹ = I - tX.
        h = &h * &(&id + &x.scale(&t));
        inv = &(&id - &x.scale(&t)) * &inv;
    }
    (h, inv)
}

/// `s u` with `s = diag(a, b, a⁻¹, b⁻¹)` and `u` a product of root elements
/// for positive roots of `Φ_s`, so the decomposition is known.
pub fn random_mixed<R: Rng + ?Sized>(field: Field, rng: &mut R) -> (ExactMatrix, ExactMatrix) {
    let rs = c2();
    let pick = |rng: &mut R| {
        if rng.gen_bool(0.5) {
            if rng.gen_bool(0.5) {
                field.one()
            } else {
                -&field.one()
            }
        } else {
            random_nonzero(field, rng)
        }
    };
    let a = pick(rng);
    let b = if rng.gen_bool(0.3) { a.clone() } else { pick(rng) };
    let s = torus(field, &a, &b).expect("nonzero");
    let phi = group_centralizer_roots(&rs, &s).expect("closed");
    let id = ExactMatrix::identity(field, 4);
    let mut u = id.clone();
    for (i, x) in root_vectors(&rs, field) {
        if phi.contains(i) && rs.is_positive(i) {
            u = &u * &(&id + &x.scale(&random_elem(field, rng)));
        }
    }
    (s, u)
}

/// Generic probe: whether the subsystem of `λ(s)` equals the rational
/// closure of `Φ_s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalLeviVerdict {
    pub phi_s: String,
    pub closure: String,
    pub lambda_image: String,
    pub agrees: bool,
}

pub fn minimal_levi_probe(
    rs: &Arc<RootSystem>,
    s: &TorusElement,
    lambda_image: &Subsystem,
) -> Result<MinimalLeviVerdict> {
    let phi = centralizer_subsystem(rs, s)?;
    let closure = rational_closure(&phi);
    if lambda_image.parent().label() != rs.label() {
        return Err(Error::InvalidSubsystem("image subsystem lives in another root system".into()));
    }
    Ok(MinimalLeviVerdict {
        phi_s: phi.type_label(),
        closure: closure.type_label(),
        lambda_image: lambda_image.type_label(),
        agrees: closure.members() == lambda_image.members(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sp4IsolatedReport {
    pub p: u64,
    pub s: ExactMatrix,
    pub lambda_s: ExactMatrix,
    pub lambda_s_is_zero: bool,
    pub centralizer_dim: usize,
    pub orbit_dim: usize,
    pub image_centralizer_dim: usize,
    pub image_orbit_dim: usize,
    pub phi_s: Vec<usize>,
    pub phi_s_type: String,
    pub phi_s_matches_torus: bool,
    pub phi_s_rationally_closed: bool,
    pub closure_type: String,
    pub closure_is_whole: bool,
    pub minimal_levi: MinimalLeviVerdict,
}

impl Sp4IsolatedReport {
    pub fn holds(&self) -> bool {
        self.lambda_s_is_zero
            && self.orbit_dim == 4
            && self.image_orbit_dim == 0
            && self.phi_s_type == "A1xA1"
            && self.phi_s_matches_torus
            && !self.phi_s_rationally_closed
            && self.closure_is_whole
            && self.minimal_levi.agrees
    }
}

/// The isolated element `s = diag(1, -1, 1, -1)` of `Sp_4`.
pub fn sp4_isolated_report(p: u64) -> Result<Sp4IsolatedReport> {
    let map = LogLikeMap::sp4(p)?;
    let field = map.field();
    let rs = c2();
    let s = torus(field, &field.one(), &-&field.one())?;
    let lambda_s = map.apply(&s)?;
    let centralizer_dim = matrix_centralizer_dim(&s, Ambient::Sp)?;
    let image_centralizer_dim = matrix_centralizer_dim(&lambda_s, Ambient::Sp)?;
    let dim = Ambient::Sp.dim(4);
    let phi = group_centralizer_roots(&rs, &s)?;
    // α1(s) = a/b = -1, α2(s) = b² = 1.
    let theta = TorusElement::from_angles(&[(1, 2), (0, 1)], p)?;
    let from_torus = centralizer_subsystem(&rs, &theta)?;
    let closure = rational_closure(&phi);
    let image = lie_centralizer_roots(&rs, &lambda_s)?;
    Ok(Sp4IsolatedReport {
        p,
        lambda_s_is_zero: lambda_s.is_zero(),
        s,
        lambda_s,
        centralizer_dim,
        orbit_dim: dim - centralizer_dim,
        image_centralizer_dim,
        image_orbit_dim: dim - image_centralizer_dim,
        phi_s: phi.members().to_vec(),
        phi_s_type: phi.type_label(),
        phi_s_matches_torus: from_torus == phi,
        phi_s_rationally_closed: is_rationally_closed(&phi),
        closure_type: closure.type_label(),
        closure_is_whole: closure.len() == rs.num_roots(),
        minimal_levi: minimal_levi_probe(&rs, &theta, &image)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyWitness {
    pub a: String,
    pub b: String,
    pub verdict: MinimalLeviVerdict,
    pub in_locus: bool,
}

/// Verdicts of the minimal-Levi probe over every `F_p`-point
/// `diag(a, b, a⁻¹, b⁻¹)` of the maximal torus. Elements are split by
/// whether `g` and `λ(g)` have centralizers of equal dimension, which is
/// how the étale locus is approximated here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalLeviSurvey {
    pub p: u64,
    pub elements: usize,
    pub torus_matches_matrix: usize,
    pub agree_in_locus: usize,
    pub disagree_in_locus: usize,
    pub agree_off_locus: usize,
    pub disagree_off_locus: usize,
    pub witnesses: Vec<SurveyWitness>,
}

fn primitive_root(p: u64) -> u64 {
    (2..p)
        .find(|&g| {
            let mut x = 1u64;
            (1..p - 1).all(|_| {
                x = x * g % p;
                x != 1
            })
        })
        .unwrap_or(1)
}

pub fn minimal_levi_survey(p: u64, witness_cap: usize) -> Result<MinimalLeviSurvey> {
    let map = LogLikeMap::sp4(p)?;
    if p == 0 {
        return Err(Error::Characteristic("the survey runs over a finite field".into()));
    }
    let field = map.field();
    let rs = c2();
    let g = primitive_root(p);
    let order = (p - 1) as i64;
    let dim = Ambient::Sp.dim(4);
    let mut out = MinimalLeviSurvey {
        p,
        elements: 0,
        torus_matches_matrix: 0,
        agree_in_locus: 0,
        disagree_in_locus: 0,
        agree_off_locus: 0,
        disagree_off_locus: 0,
        witnesses: Vec::new(),
    };
    let pow = |k: i64| field.from_i64(g as i64).pow(k as u64);
    for k in 0..order {
        for l in 0..order {
            let (a, b) = (pow(k), pow(l));
            let s = torus(field, &a, &b)?;
            // α1(s) = a/b = g^(k-l), α2(s) = b² = g^(2l).
            let theta = TorusElement::from_angles(&[(k - l, order), (2 * l, order)], p)?;
            let phi = group_centralizer_roots(&rs, &s)?;
            if centralizer_subsystem(&rs, &theta)? == phi {
                out.torus_matches_matrix += 1;
            }
            let x = map.apply(&s)?;
            let image = lie_centralizer_roots(&rs, &x)?;
            let verdict = minimal_levi_probe(&rs, &theta, &image)?;
            let in_locus =
                dim - matrix_centralizer_dim(&s, Ambient::Sp)? == dim - matrix_centralizer_dim(&x, Ambient::Sp)?;
            out.elements += 1;
            match (in_locus, verdict.agrees) {
                (true, true) => out.agree_in_locus += 1,
                (true, false) => out.disagree_in_locus += 1,
                (false, true) => out.agree_off_locus += 1,
                (false, false) => out.disagree_off_locus += 1,
            }
            if !verdict.agrees && out.witnesses.len() < witness_cap {
                out.witnesses.push(SurveyWitness { a: a.to_string(), b: b.to_string(), verdict, in_locus });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::centralizer::{in_sp_group, in_sp_lie};
    use crate::exactnum::sample::rng;

    #[test]
    fn root_vectors_are_eigenvectors() {
        let f = Field::Prime(11);
        let rs = c2();
        let (a, b) = (f.from_i64(3), f.from_i64(7));
        let t = torus(f, &a, &b).unwrap();
        let t_inv = t.inverse().unwrap();
        let mut seen = Vec::new();
        for (i, x) in root_vectors(&rs, f) {
            assert!(in_sp_lie(&x));
            let c = rs.root(i);
            // α = c1 α1 + c2 α2, α1(t) = a/b, α2(t) = b².
            let ratio = &a / &b;
            let value = &pow_signed(&ratio, c[0]) * &pow_signed(&(&b * &b), c[1]);
            assert_eq!(&(&t * &x) * &t_inv, x.scale(&value));
            seen.push(i);
        }
        seen.sort();
        assert_eq!(seen, (0..8).collect::<Vec<_>>());
    }

    fn pow_signed(x: &FieldElem, k: i64) -> FieldElem {
        if k >= 0 {
            x.pow(k as u64)
        } else {
            x.inv().unwrap().pow((-k) as u64)
        }
    }

    #[test]
    fn isolated() {
        for p in [3, 5, 7, 0] {
            let r = sp4_isolated_report(p).unwrap();
            assert!(r.holds(), "{r:?}");
            assert_eq!(r.centralizer_dim, 6);
            assert_eq!(r.closure_type, "C2");
        }
        assert!(sp4_isolated_report(2).is_err());
    }

    #[test]
    fn samplers_stay_in_group() {
        let f = Field::Prime(7);
        let mut r = rng(3);
        for _ in 0..20 {
            let (h, inv) = random_sp4(f, 8, &mut r);
            assert!(in_sp_group(&h));
            assert!((&h * &inv) == ExactMatrix::identity(f, 4));
            let (s, u) = random_mixed(f, &mut r);
            assert!(in_sp_group(&s) && in_sp_group(&u));
            assert_eq!(&s * &u, &u * &s);
        }
    }

    #[test]
    fn survey_counts() {
        let s = minimal_levi_survey(7, 3).unwrap();
        assert_eq!(s.elements, 36);
        assert_eq!(s.torus_matches_matrix, 36);
        // a = 2, b = -1/2: Φ_s is empty but λ(s) is killed by e1 - e2.
        assert!(s.disagree_off_locus > 0);
        assert_eq!(s.disagree_in_locus, 0);
    }
}
