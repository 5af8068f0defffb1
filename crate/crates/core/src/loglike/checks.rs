use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::map::{LogLikeMap, MapKind};
use super::sp4;
use crate::error::{Error, Result};
use crate::exactnum::centralizer::matrix_centralizer_dim;
use crate::exactnum::field::FieldElem;
use crate::exactnum::jordan::{jordan_data, jordan_decomposition, multiplicative_jordan, JordanData};
use crate::exactnum::matrix::ExactMatrix;
use crate::exactnum::sample::{distinct_elems, random_invertible};
use crate::jclass::{induce, pattern_of, ClassDatum, LeviShape, Mode};

/// An element `g = s u` of the map's group built with a known Jordan
/// decomposition.
#[derive(Debug, Clone)]
pub struct Constructed {
    pub g: ExactMatrix,
    pub s: ExactMatrix,
    pub u: ExactMatrix,
}

/// Jordan data with the slots of `class` and eigenvalues drawn at random;
/// for `SL_n` the product of the eigenvalues is one.
fn random_group_data<R: Rng + ?Sized>(map: &LogLikeMap, class: &ClassDatum, rng: &mut R) -> Result<JordanData> {
    let field = map.field();
    let r = class.r();
    let zero = [field.zero()];
    for _ in 0..100_000 {
        let mut eigs = distinct_elems(field, r, &zero, rng);
        if map.kind == MapKind::SlTraceShift {
            let sizes: Vec<usize> = class.slots().iter().map(|s| s.m()).collect();
            let solvable = sizes.iter().position(|&m| m == 1);
            let prod =
                |eigs: &[FieldElem]| eigs.iter().zip(&sizes).fold(field.one(), |acc, (a, &m)| &acc * &a.pow(m as u64));
            match solvable {
                Some(k) => {
                    eigs[k] = field.one();
                    eigs[k] = prod(&eigs).inv().expect("nonzero");
                    let mut distinct = eigs.clone();
                    distinct.sort();
                    distinct.dedup();
                    if distinct.len() != r {
                        continue;
                    }
                }
                None => {
                    if !prod(&eigs).is_one() {
                        continue;
                    }
                }
            }
        }
        let blocks = eigs.into_iter().zip(class.slots()).map(|(a, s)| (a, s.mu().clone())).collect();
        return JordanData::new(field, blocks);
    }
    Err(Error::InvalidClass(format!("no determinant-one eigenvalues found for {class}")))
}

/// `h N h⁻¹` with `N` the Jordan form for `class`; `s` and `u` are the
/// conjugated diagonal and unipotent factors of `N`.
pub fn construct_in_class<R: Rng + ?Sized>(map: &LogLikeMap, class: &ClassDatum, rng: &mut R) -> Result<Constructed> {
    if map.kind == MapKind::Sp4Cayley {
        return Err(Error::InvalidClass("GL class data do not parametrize Sp4 classes".into()));
    }
    if class.n() != map.n {
        return Err(Error::DimensionMismatch(format!("class of size {} for n = {}", class.n(), map.n)));
    }
    let field = map.field();
    let jd = random_group_data(map, class, rng)?;
    let normal = jd.normal_form();
    let diag: Vec<FieldElem> =
        jd.blocks().iter().flat_map(|(a, mu)| std::iter::repeat(a.clone()).take(mu.size())).collect();
    let d = ExactMatrix::diag(field, &diag);
    let (h, inv) = random_invertible(field, map.n, rng);
    let conj = |m: &ExactMatrix| &(&h * m) * &inv;
    let g = conj(&normal);
    let s = conj(&d);
    let u = &s.inverse().expect("nonzero eigenvalues") * &g;
    Ok(Constructed { g, s, u })
}

/// A random element of the map's group with known decomposition: a random
/// class for `GL_n` and `SL_n`, a torus element times a commuting unipotent
/// for `Sp_4`, in both cases conjugated at random.
pub fn construct_random<R: Rng + ?Sized>(map: &LogLikeMap, classes: &[ClassDatum], rng: &mut R) -> Result<Constructed> {
    match map.kind {
        MapKind::Sp4Cayley => {
            let field = map.field();
            let (s, u) = sp4::random_mixed(field, rng);
            let (h, inv) = sp4::random_sp4(field, 12, rng);
            let conj = |m: &ExactMatrix| &(&h * m) * &inv;
            let (s, u) = (conj(&s), conj(&u));
            Ok(Constructed { g: &s * &u, s, u })
        }
        _ => {
            let class = classes.choose(rng).ok_or_else(|| Error::InvalidClass("no classes to sample".into()))?;
            construct_in_class(map, class, rng)
        }
    }
}

/// A random element of the map's group, with its inverse.
pub fn random_group_element<R: Rng + ?Sized>(map: &LogLikeMap, rng: &mut R) -> (ExactMatrix, ExactMatrix) {
    let field = map.field();
    match map.kind {
        MapKind::GlShift => random_invertible(field, map.n, rng),
        MapKind::SlTraceShift => {
            let (mut h, _) = random_invertible(field, map.n, rng);
            let c = h.det().inv().expect("invertible");
            for j in 0..map.n {
                let v = h.get(0, j) * &c;
                h.set(0, j, v);
            }
            let inv = h.inverse().expect("determinant one");
            (h, inv)
        }
        MapKind::Sp4Cayley => sp4::random_sp4(field, 12, rng),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanCompat {
    pub g_data: JordanData,
    pub image_data: JordanData,
    /// The semisimple part of `λ(g)` equals `λ(s)`.
    pub semisimple_parts_agree: bool,
    pub lambda_s_semisimple: bool,
    pub lambda_u_nilpotent: bool,
}

impl JordanCompat {
    pub fn holds(&self) -> bool {
        self.semisimple_parts_agree && self.lambda_s_semisimple && self.lambda_u_nilpotent
    }
}

fn is_semisimple(m: &ExactMatrix) -> Result<bool> {
    Ok(jordan_data(m)?.blocks().iter().all(|(_, mu)| mu.len() == mu.size()))
}

pub fn check_jordan_compat(map: &LogLikeMap, g: &ExactMatrix) -> Result<JordanCompat> {
    map.check_group(g)?;
    let (s, u) = multiplicative_jordan(g)?;
    let x = map.apply_unchecked(g);
    let (xs, _) = jordan_decomposition(&x)?;
    let lambda_s = map.apply_unchecked(&s);
    let lambda_u = map.apply_unchecked(&u);
    Ok(JordanCompat {
        g_data: jordan_data(g)?,
        image_data: jordan_data(&x)?,
        semisimple_parts_agree: xs == lambda_s,
        lambda_s_semisimple: is_semisimple(&lambda_s)?,
        lambda_u_nilpotent: lambda_u.pow(map.n as u32).is_zero(),
    })
}

/// Membership of `g` in the domain where the map is compared on strata:
/// everywhere for `GL_n`, `R(λ(g)) ≠ 0` for `SL_n`, and equal centralizer
/// dimensions of `g` and `λ(g)` for `Sp_4`.
pub fn in_etale_locus(map: &LogLikeMap, g: &ExactMatrix) -> Result<bool> {
    map.check_group(g)?;
    match map.kind {
        MapKind::GlShift => Ok(true),
        MapKind::SlTraceShift => map.in_image_locus(&map.apply_unchecked(g)),
        MapKind::Sp4Cayley => {
            let a = map.ambient();
            Ok(matrix_centralizer_dim(g, a)? == matrix_centralizer_dim(&map.apply_unchecked(g), a)?)
        }
    }
}

fn pattern(m: &ExactMatrix) -> Result<ClassDatum> {
    Ok(pattern_of(&jordan_data(m)?, Mode::Liealg))
}

/// For this pair: equal patterns of `g1, g2` imply equal patterns of
/// `λ(g1), λ(g2)`.
pub fn check_stratification(map: &LogLikeMap, g1: &ExactMatrix, g2: &ExactMatrix) -> Result<bool> {
    for g in [g1, g2] {
        if !in_etale_locus(map, g)? {
            return Err(Error::OutsideEtaleLocus(format!("{g}")));
        }
    }
    if pattern(g1)? != pattern(g2)? {
        return Ok(true);
    }
    Ok(pattern(&map.apply_unchecked(g1))? == pattern(&map.apply_unchecked(g2))?)
}

/// Induces the unipotent classes of `ls` on the group side and the
/// nilpotent classes of their images on the Lie algebra side, routing each
/// block through an actual matrix.
pub fn check_induction_compat(map: &LogLikeMap, ls: &LeviShape) -> Result<bool> {
    if map.kind != MapKind::GlShift {
        return Err(Error::Characteristic("induction compatibility is checked for the GL shift".into()));
    }
    let field = map.field();
    let mut images = Vec::with_capacity(ls.parts.len());
    for mu in &ls.parts {
        let block = LogLikeMap::gl(mu.size(), map.p)?;
        let u = JordanData::new(field, vec![(field.one(), mu.clone())])?.normal_form();
        let jd = jordan_data(&block.apply(&u)?)?;
        match jd.blocks() {
            [(a, nu)] if a.is_zero() => images.push(nu.clone()),
            _ => return Ok(false),
        }
    }
    Ok(induce(ls) == induce(&LeviShape::new(images)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::Field;
    use crate::exactnum::sample::rng;
    use crate::jclass::enumerate_classes;
    use crate::partition::Partition;

    #[test]
    fn gl_unipotent_and_mixed() {
        let f = Field::Prime(101);
        let map = LogLikeMap::gl(3, 101).unwrap();
        let u = ExactMatrix::jordan_block(&f.one(), 3);
        let r = check_jordan_compat(&map, &u).unwrap();
        assert!(r.holds());
        assert_eq!(r.image_data.blocks()[0].0, f.zero());
        let g = ExactMatrix::block_diag(
            f,
            &[ExactMatrix::jordan_block(&f.from_i64(2), 2), ExactMatrix::diag(f, &[f.from_i64(3)])],
        );
        assert!(check_jordan_compat(&map, &g).unwrap().holds());
    }

    #[test]
    fn constructed_elements_decompose_as_built() {
        let mut r = rng(11);
        for (map, classes) in [
            (LogLikeMap::gl(4, 101).unwrap(), enumerate_classes(4, Mode::Group).unwrap()),
            (LogLikeMap::sl(3, 7).unwrap(), enumerate_classes(3, Mode::Group).unwrap()),
            (LogLikeMap::sp4(7).unwrap(), vec![]),
        ] {
            for _ in 0..20 {
                let c = construct_random(&map, &classes, &mut r).unwrap();
                assert!(map.in_group(&c.g));
                let (s, u) = multiplicative_jordan(&c.g).unwrap();
                assert_eq!(s, c.s);
                assert_eq!(u, c.u);
                assert!(check_jordan_compat(&map, &c.g).unwrap().holds());
            }
        }
    }

    #[test]
    fn sp4_torus_is_semisimple() {
        let f = Field::Prime(5);
        let map = LogLikeMap::sp4(5).unwrap();
        let t = sp4::torus(f, &f.from_i64(2), &f.from_i64(3)).unwrap();
        let r = check_jordan_compat(&map, &t).unwrap();
        assert!(r.lambda_s_semisimple && r.holds());
    }

    #[test]
    fn stratification_pairs() {
        let mut r = rng(5);
        let map = LogLikeMap::gl(4, 101).unwrap();
        let class = ClassDatum::from_parts(Mode::Group, &[(2, &[2]), (1, &[1]), (1, &[1])]).unwrap();
        let a = construct_in_class(&map, &class, &mut r).unwrap();
        let b = construct_in_class(&map, &class, &mut r).unwrap();
        assert!(check_stratification(&map, &a.g, &b.g).unwrap());
        let sl = LogLikeMap::sl(2, 7).unwrap();
        let f = Field::Prime(7);
        // λ(-J_2(1)) is a nonzero nilpotent, where R = -4.
        let g = ExactMatrix::jordan_block(&-&f.one(), 2);
        assert!(in_etale_locus(&sl, &g).unwrap());
        assert!(check_stratification(&sl, &g, &g).unwrap());
    }

    #[test]
    fn induction() {
        let map = LogLikeMap::gl(5, 101).unwrap();
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        for parts in [vec![p(&[1]), p(&[1]), p(&[1])], vec![p(&[1, 1]), p(&[1])], vec![p(&[2, 1]), p(&[2])]] {
            assert!(check_induction_compat(&map, &LeviShape::new(parts).unwrap()).unwrap());
        }
        assert!(
            check_induction_compat(&LogLikeMap::sl(3, 7).unwrap(), &LeviShape::new(vec![p(&[1])]).unwrap()).is_err()
        );
    }
}
