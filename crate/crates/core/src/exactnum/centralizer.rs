//! Centralizers of matrices inside classical Lie algebras.

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::linalg::{self, Rows};
use super::matrix::ExactMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    Gl,
    Sl,
    Sp,
}

impl Ambient {
    pub fn dim(self, n: usize) -> usize {
        match self {
            Ambient::Gl => n * n,
            Ambient::Sl => n * n - 1,
            Ambient::Sp => n * (n + 1) / 2,
        }
    }
}

/// The form `J = [[0, I], [-I, 0]]` on `k^n`, `n` even.
pub fn symplectic_form(field: Field, n: usize) -> ExactMatrix {
    let h = n / 2;
    ExactMatrix::from_fn(field, n, |i, j| {
        if j == i + h {
            field.one()
        } else if i == j + h {
            -&field.one()
        } else {
            field.zero()
        }
    })
}

/// `xᵀJ + Jx = 0`.
pub fn in_sp_lie(x: &ExactMatrix) -> bool {
    x.n() % 2 == 0 && {
        let j = symplectic_form(x.field(), x.n());
        (&(&x.transpose() * &j) + &(&j * x)).is_zero()
    }
}

/// `gᵀJg = J`.
pub fn in_sp_group(g: &ExactMatrix) -> bool {
    g.n() % 2 == 0 && {
        let j = symplectic_form(g.field(), g.n());
        &(&g.transpose() * &j) * g == j
    }
}

/// Linear constraints on `vec(y)` (row-major) cutting out the ambient Lie
/// algebra inside `gl_n`.
fn ambient_constraints(ambient: Ambient, field: Field, n: usize) -> Rows {
    match ambient {
        Ambient::Gl => Vec::new(),
        Ambient::Sl => vec![(0..n * n).map(|k| if k / n == k % n { field.one() } else { field.zero() }).collect()],
        Ambient::Sp => {
            // Entry (a, b) of yᵀJ + Jy, as a functional of y.
            let j = symplectic_form(field, n);
            let mut rows = Vec::new();
            for a in 0..n {
                for b in a..n {
                    let row = (0..n * n)
                        .map(|k| {
                            let (r, c) = (k / n, k % n);
                            // (yᵀJ)_{ab} = Σ_r y_{ra} J_{rb}; (Jy)_{ab} = Σ_c J_{ac} y_{cb}
                            let mut v = field.zero();
                            if c == a {
                                v = &v + j.get(r, b);
                            }
                            if c == b {
                                v = &v + j.get(a, r);
                            }
                            v
                        })
                        .collect();
                    rows.push(row);
                }
            }
            rows
        }
    }
}

/// Dimension of `{y ∈ ambient : ym = my}`.
///
/// `m` may be an element of the Lie algebra or of the group of the ambient;
/// for `Sp` one of the two membership conditions must hold.
pub fn matrix_centralizer_dim(m: &ExactMatrix, ambient: Ambient) -> Result<usize> {
    let n = m.n();
    let field = m.field();
    match ambient {
        Ambient::Gl => {}
        Ambient::Sl => {
            if !m.trace().is_zero() && !m.det().is_one() {
                return Err(Error::AmbientMismatch("sl".into()));
            }
        }
        Ambient::Sp => {
            if !in_sp_lie(m) && !in_sp_group(m) {
                return Err(Error::AmbientMismatch("sp".into()));
            }
        }
    }
    let mut rows = ambient_constraints(ambient, field, n);
    // (ym - my)_{ab} = Σ_k y_{ak} m_{kb} - m_{ak} y_{kb}
    for a in 0..n {
        for b in 0..n {
            let mut row = vec![field.zero(); n * n];
            for k in 0..n {
                row[a * n + k] = &row[a * n + k] + m.get(k, b);
                row[k * n + b] = &row[k * n + b] - m.get(a, k);
            }
            rows.push(row);
        }
    }
    Ok(n * n - linalg::rank(&rows, field))
}
