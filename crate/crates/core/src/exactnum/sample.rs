//! Seeded random matrices with prescribed Jordan data.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{Field, FieldElem};
use super::jordan::JordanData;
use super::matrix::ExactMatrix;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform over `F_p`; small integers in `[-9, 9]` over `ℚ`.
pub fn random_elem<R: Rng + ?Sized>(field: Field, rng: &mut R) -> FieldElem {
    match field {
        Field::Prime(p) => FieldElem::Residue { value: rng.gen_range(0..p), p },
        Field::Rational => field.from_i64(rng.gen_range(-9..=9)),
    }
}

pub fn random_nonzero<R: Rng + ?Sized>(field: Field, rng: &mut R) -> FieldElem {
    loop {
        let a = random_elem(field, rng);
        if !a.is_zero() {
            return a;
        }
    }
}

pub fn random_matrix<R: Rng + ?Sized>(field: Field, n: usize, rng: &mut R) -> ExactMatrix {
    ExactMatrix::from_fn(field, n, |_, _| random_elem(field, rng))
}

/// Rejection-sampled invertible matrix together with its inverse.
pub fn random_invertible<R: Rng + ?Sized>(field: Field, n: usize, rng: &mut R) -> (ExactMatrix, ExactMatrix) {
    loop {
        let h = random_matrix(field, n, rng);
        if let Some(inv) = h.inverse() {
            return (h, inv);
        }
    }
}

/// `h J h⁻¹` for the Jordan normal form `J` of `jd` and a random
/// invertible `h`; returns the matrix and `h`.
pub fn conjugated<R: Rng + ?Sized>(jd: &JordanData, rng: &mut R) -> (ExactMatrix, ExactMatrix) {
    let (h, inv) = random_invertible(jd.field(), jd.n(), rng);
    (&(&h * &jd.normal_form()) * &inv, h)
}

/// `n` pairwise distinct random elements avoiding `avoid`.
pub fn distinct_elems<R: Rng + ?Sized>(field: Field, count: usize, avoid: &[FieldElem], rng: &mut R) -> Vec<FieldElem> {
    let mut out: Vec<FieldElem> = Vec::with_capacity(count);
    while out.len() < count {
        let a = random_elem(field, rng);
        if !avoid.contains(&a) && !out.contains(&a) {
            out.push(a);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::jordan::jordan_data;
    use crate::partition::Partition;

    #[test]
    fn deterministic_and_roundtrips() {
        let f = Field::Prime(101);
        let jd = JordanData::new(
            f,
            vec![
                (f.from_i64(3), Partition::new(vec![2, 1]).unwrap()),
                (f.from_i64(9), Partition::new(vec![1]).unwrap()),
            ],
        )
        .unwrap();
        let (g1, _) = conjugated(&jd, &mut rng(7));
        let (g2, _) = conjugated(&jd, &mut rng(7));
        assert_eq!(g1, g2);
        assert_eq!(jordan_data(&g1).unwrap(), jd);
    }
}
