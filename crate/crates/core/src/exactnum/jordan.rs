//! Jordan decomposition certificates via rank profiles.

use serde::{Deserialize, Serialize};

use super::field::{Field, FieldElem};
use super::linalg;
use super::matrix::ExactMatrix;
use super::poly::total_multiplicity;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Eigenvalues with the Jordan type of each generalized eigenspace, sorted
/// by eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JordanData {
    field: Field,
    blocks: Vec<(FieldElem, Partition)>,
}

impl JordanData {
    pub fn new(field: Field, mut blocks: Vec<(FieldElem, Partition)>) -> Result<Self> {
        if blocks.iter().any(|(a, _)| a.field() != field) {
            return Err(Error::FieldMismatch(format!("eigenvalues must lie in {field}")));
        }
        if blocks.iter().any(|(_, mu)| mu.is_empty()) {
            return Err(Error::InvalidPartition("empty Jordan type".into()));
        }
        blocks.sort_by(|a, b| a.0.cmp(&b.0));
        if blocks.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidPartition("repeated eigenvalue".into()));
        }
        Ok(JordanData { field, blocks })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn blocks(&self) -> &[(FieldElem, Partition)] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|(_, mu)| mu.size()).sum()
    }

    /// Block diagonal Jordan normal form, upper triangular.
    pub fn normal_form(&self) -> ExactMatrix {
        let blocks: Vec<ExactMatrix> = self
            .blocks
            .iter()
            .flat_map(|(a, mu)| mu.parts().iter().map(move |&k| ExactMatrix::jordan_block(a, k)))
            .collect();
        ExactMatrix::block_diag(self.field, &blocks)
    }

    /// Applies `f` to every eigenvalue. Fails if two eigenvalues collide.
    pub fn map_eigenvalues(&self, f: impl Fn(&FieldElem) -> FieldElem) -> Result<JordanData> {
        JordanData::new(self.field, self.blocks.iter().map(|(a, mu)| (f(a), mu.clone())).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct JordanRepr {
    p: u64,
    blocks: Vec<(String, Partition)>,
}

impl Serialize for JordanData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JordanRepr {
            p: self.field.characteristic(),
            blocks: self.blocks.iter().map(|(a, mu)| (a.to_string(), mu.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for JordanData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = JordanRepr::deserialize(d)?;
        let field = Field::new(repr.p).map_err(D::Error::custom)?;
        let blocks = repr
            .blocks
            .into_iter()
            .map(|(a, mu)| Ok((field.parse(&a)?, mu)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        JordanData::new(field, blocks).map_err(D::Error::custom)
    }
}

/// `rank((m - a)^k)` for `k = 0, 1, ...` until it stops dropping.
pub fn rank_profile(m: &ExactMatrix, a: &FieldElem) -> Vec<usize> {
    let shifted = m.shift(a);
    let mut ranks = vec![m.n()];
    let mut power = ExactMatrix::identity(m.field(), m.n());
    loop {
        power = &power * &shifted;
        let r = power.rank();
        let last = *ranks.last().expect("nonempty");
        ranks.push(r);
        if r == last {
            ranks.pop();
            return ranks;
        }
    }
}

/// Jordan data of `m`, which must have all eigenvalues in its field.
pub fn jordan_data(m: &ExactMatrix) -> Result<JordanData> {
    let roots = m.char_poly().roots_in_field();
    if total_multiplicity(&roots) != m.n() {
        return Err(Error::NonSplitSpectrum);
    }
    let blocks = roots
        .into_iter()
        .map(|(a, _)| {
            let ranks = rank_profile(m, &a);
            // Entry k of the transpose counts Jordan blocks of size > k.
            let transpose: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
            (a, Partition::new(transpose).expect("rank drops decrease").transpose())
        })
        .collect();
    JordanData::new(m.field(), blocks)
}

/// Additive Jordan decomposition `m = s + n` with `s` semisimple, `n`
/// nilpotent and `[s, n] = 0`.
pub fn jordan_decomposition(m: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
    let jd = jordan_data(m)?;
    let field = m.field();
    let n = m.n();
    // Columns of `basis` span the generalized eigenspaces in order.
    let mut columns: Vec<Vec<FieldElem>> = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);
    for (a, mu) in jd.blocks() {
        let k = mu.size();
        let power = m.shift(a).pow(k as u32);
        let kernel = linalg::kernel(&power.rows(), n, field);
        debug_assert_eq!(kernel.len(), k);
        diag.extend(std::iter::repeat(a.clone()).take(kernel.len()));
        columns.extend(kernel);
    }
    let basis = ExactMatrix::from_fn(field, n, |i, j| columns[j][i].clone());
    let inv = basis.inverse().expect("generalized eigenspaces span");
    let s = &(&basis * &ExactMatrix::diag(field, &diag)) * &inv;
    let nil = m - &s;
    Ok((s, nil))
}

pub fn semisimple_part(m: &ExactMatrix) -> Result<ExactMatrix> {
    Ok(jordan_decomposition(m)?.0)
}

pub fn nilpotent_part(m: &ExactMatrix) -> Result<ExactMatrix> {
    Ok(jordan_decomposition(m)?.1)
}

/// Multiplicative Jordan decomposition `g = s u` of an invertible matrix.
pub fn multiplicative_jordan(g: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
    let (s, _) = jordan_decomposition(g)?;
    let s_inv = s.inverse().ok_or_else(|| Error::NotInGroup("singular matrix has no unipotent part".into()))?;
    let u = &s_inv * g;
    Ok((s, u))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn nilpotent_block() {
        let q = Field::Rational;
        let j = ExactMatrix::jordan_block(&q.zero(), 3);
        let jd = jordan_data(&j).unwrap();
        assert_eq!(jd.blocks(), &[(q.zero(), part(&[3]))]);
    }

    #[test]
    fn diagonal_over_f7() {
        let f = Field::Prime(7);
        let d = ExactMatrix::diag(f, &[f.one(), f.one(), f.from_i64(2)]);
        let jd = jordan_data(&d).unwrap();
        assert_eq!(jd.blocks(), &[(f.one(), part(&[1, 1])), (f.from_i64(2), part(&[1]))]);
    }

    #[test]
    fn non_split_is_reported() {
        let f = Field::Prime(5);
        // t^2 - 2 is irreducible mod 5.
        let m = ExactMatrix::from_i64(f, &[&[0, 2], &[1, 0]]).unwrap();
        assert_eq!(jordan_data(&m), Err(Error::NonSplitSpectrum));
    }

    #[test]
    fn conjugated_roundtrip() {
        let f = Field::Prime(101);
        let (a, b) = (f.from_i64(17), f.from_i64(40));
        let jd = JordanData::new(f, vec![(a, part(&[2, 1])), (b, part(&[1]))]).unwrap();
        let h = ExactMatrix::from_i64(f, &[&[1, 2, 0, 3], &[0, 1, 5, 0], &[4, 0, 1, 1], &[0, 7, 0, 1]]).unwrap();
        let g = &(&h * &jd.normal_form()) * &h.inverse().unwrap();
        assert_eq!(jordan_data(&g).unwrap(), jd);
        let (s, nil) = jordan_decomposition(&g).unwrap();
        assert!(s.commutator(&nil).is_zero());
        assert!(nil.pow(4).is_zero());
        let sd = jordan_data(&s).unwrap();
        assert!(sd.blocks().iter().all(|(_, mu)| mu.len() == mu.size()));
        let (s2, u) = multiplicative_jordan(&g).unwrap();
        assert_eq!(s2, s);
        assert!(u.shift(&f.one()).pow(4).is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let q = Field::Rational;
        let jd = JordanData::new(q, vec![(q.parse("-1/2").unwrap(), part(&[2]))]).unwrap();
        let s = serde_json::to_string(&jd).unwrap();
        assert_eq!(serde_json::from_str::<JordanData>(&s).unwrap(), jd);
    }
}
