//! Square matrices over `ℚ` or `F_p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::field::{Field, FieldElem};
use super::linalg::{self, Rows};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    field: Field,
    n: usize,
    entries: Vec<FieldElem>,
}

impl ExactMatrix {
    pub fn from_rows(field: Field, rows: Rows) -> Result<ExactMatrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("matrix is not square".into()));
        }
        if rows.iter().flatten().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch(format!("entries are not all in {field}")));
        }
        Ok(ExactMatrix { field, n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Result<ExactMatrix> {
        ExactMatrix::from_rows(field, rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect())
    }

    pub fn from_fn(field: Field, n: usize, mut f: impl FnMut(usize, usize) -> FieldElem) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        ExactMatrix { field, n, entries }
    }

    pub fn zero(field: Field, n: usize) -> Self {
        ExactMatrix::from_fn(field, n, |_, _| field.zero())
    }

    pub fn identity(field: Field, n: usize) -> Self {
        ExactMatrix::scalar(field, n, &field.one())
    }

    pub fn scalar(field: Field, n: usize, c: &FieldElem) -> Self {
        ExactMatrix::from_fn(field, n, |i, j| if i == j { c.clone() } else { field.zero() })
    }

    pub fn diag(field: Field, d: &[FieldElem]) -> Self {
        let n = d.len();
        ExactMatrix::from_fn(field, n, |i, j| if i == j { d[i].clone() } else { field.zero() })
    }

    /// Elementary matrix `E_ij`.
    pub fn unit(field: Field, n: usize, i: usize, j: usize) -> Self {
        ExactMatrix::from_fn(field, n, |a, b| if (a, b) == (i, j) { field.one() } else { field.zero() })
    }

    /// Upper triangular Jordan block `J_k(a)`.
    pub fn jordan_block(a: &FieldElem, k: usize) -> Self {
        let field = a.field();
        ExactMatrix::from_fn(field, k, |i, j| {
            if i == j {
                a.clone()
            } else if j == i + 1 {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    pub fn block_diag(field: Field, blocks: &[ExactMatrix]) -> Self {
        let n = blocks.iter().map(|b| b.n).sum();
        let mut m = ExactMatrix::zero(field, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.n;
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElem {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    pub fn rows(&self) -> Rows {
        self.entries
            .chunks(self.n.max(1))
            .map(<[FieldElem]>::to_vec)
            .collect::<Vec<_>>()
            .into_iter()
            .take(self.n)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElem::is_zero)
    }

    pub fn trace(&self) -> FieldElem {
        (0..self.n).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix::from_fn(self.field, self.n, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        ExactMatrix { field: self.field, n: self.n, entries: self.entries.iter().map(|e| e * c).collect() }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = ExactMatrix::identity(self.field, self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// `self - c I`.
    pub fn shift(&self, c: &FieldElem) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = self.get(i, i) - c;
            m.set(i, i, v);
        }
        m
    }

    pub fn commutator(&self, other: &ExactMatrix) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn det(&self) -> FieldElem {
        linalg::determinant(&self.rows(), self.field)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows(), self.field)
    }

    pub fn inverse(&self) -> Option<Self> {
        linalg::inverse(&self.rows(), self.field).map(|r| ExactMatrix::from_rows(self.field, r).expect("square"))
    }

    /// Characteristic polynomial `det(tI - m)`, via reduction to upper
    /// Hessenberg form (valid over any field).
    pub fn char_poly(&self) -> Poly {
        let n = self.n;
        let field = self.field;
        let mut h = self.rows();
        for j in 0..n.saturating_sub(2) {
            // Make h[i][j] vanish for i >= j + 2 by similarity transforms.
            if h[j + 1][j].is_zero() {
                if let Some(i) = (j + 2..n).find(|&i| !h[i][j].is_zero()) {
                    h.swap(i, j + 1);
                    for row in h.iter_mut() {
                        row.swap(i, j + 1);
                    }
                }
            }
            if h[j + 1][j].is_zero() {
                continue;
            }
            let piv_inv = h[j + 1][j].inv().expect("nonzero");
            for i in j + 2..n {
                if h[i][j].is_zero() {
                    continue;
                }
                let u = &h[i][j] * &piv_inv;
                for k in 0..n {
                    let d = &u * &h[j + 1][k];
                    h[i][k] = &h[i][k] - &d;
                }
                for row in h.iter_mut() {
                    let d = &u * &row[i];
                    row[j + 1] = &row[j + 1] + &d;
                }
            }
        }
        // p_0 = 1, p_{m+1} = (t - h_mm) p_m - Σ_{i<m} h_im (Π_{k=i+1..m} h_{k,k-1}) p_i
        let mut ps: Vec<Poly> = vec![Poly::constant(field.one())];
        for m in 0..n {
            let lin = Poly::linear_root(&h[m][m]);
            let mut next = lin.mul(&ps[m]);
            let mut prod = field.one();
            for i in (0..m).rev() {
                prod = &prod * &h[i + 1][i];
                let c = &h[i][m] * &prod;
                if !c.is_zero() {
                    next = next.sub(&ps[i].scale(&c));
                }
            }
            ps.push(next);
        }
        ps.pop().expect("nonempty")
    }

    /// Companion matrix of a monic polynomial, acting as multiplication by
    /// `t` on `k[t]/(f)` in the basis `1, t, ..., t^{n-1}`.
    pub fn companion(f: &Poly) -> Result<Self> {
        let n =
            f.degree().filter(|&d| d > 0).ok_or_else(|| Error::DimensionMismatch("companion of a constant".into()))?;
        if !f.leading().is_one() {
            return Err(Error::DimensionMismatch("companion of a non-monic polynomial".into()));
        }
        let field = f.field();
        Ok(ExactMatrix::from_fn(field, n, |i, j| {
            if j == n - 1 {
                -&f.coeff(i)
            } else if i == j + 1 {
                field.one()
            } else {
                field.zero()
            }
        }))
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n);
        ExactMatrix {
            field: self.field,
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n);
        ExactMatrix {
            field: self.field,
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let field = self.field;
        let mut out = vec![field.zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a * &rhs.entries[k * n + j];
                    out[i * n + j] = &out[i * n + j] + &prod;
                }
            }
        }
        ExactMatrix { field, n, entries: out }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix { field: self.field, n: self.n, entries: self.entries.iter().map(|e| -e).collect() }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    p: u64,
    rows: Vec<Vec<String>>,
}

impl Serialize for ExactMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            p: self.field.characteristic(),
            rows: self.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = MatrixRepr::deserialize(d)?;
        let field = Field::new(repr.p).map_err(D::Error::custom)?;
        let rows = repr
            .rows
            .iter()
            .map(|r| r.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Rows>>()
            .map_err(D::Error::custom)?;
        ExactMatrix::from_rows(field, rows).map_err(D::Error::custom)
    }
}
