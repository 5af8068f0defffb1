//! Dense elimination on rectangular row-major matrices.
//!
//! Ranks and determinants use fraction-free (Bareiss) elimination; kernels
//! and inverses use Gauss-Jordan reduction. Everything is exact.

use super::field::{Field, FieldElem};

pub type Rows = Vec<Vec<FieldElem>>;

/// Bareiss elimination in place. Returns the pivot columns and the number
/// of row swaps performed.
fn bareiss(m: &mut Rows, field: Field) -> (Vec<usize>, usize) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = field.one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        if piv != r {
            m.swap(piv, r);
            swaps += 1;
        }
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..ncols {
                let num = &(&pivot_row[col] * &row[j]) - &(&lead * &pivot_row[j]);
                row[j] = &num / &prev;
            }
            row[col] = field.zero();
        }
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    (pivots, swaps)
}

pub fn rank(rows: &[Vec<FieldElem>], field: Field) -> usize {
    let mut m = rows.to_vec();
    bareiss(&mut m, field).0.len()
}

/// Determinant of a square matrix; `1` for the empty matrix.
pub fn determinant(rows: &[Vec<FieldElem>], field: Field) -> FieldElem {
    let n = rows.len();
    if n == 0 {
        return field.one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut m = rows.to_vec();
    let (pivots, swaps) = bareiss(&mut m, field);
    if pivots.len() < n {
        return field.zero();
    }
    let det = m[n - 1][n - 1].clone();
    if swaps % 2 == 1 {
        -det
    } else {
        det
    }
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut Rows) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(piv, r);
        let inv = m[r][col].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..nrows {
            if i == r || m[i][col].is_zero() {
                continue;
            }
            let factor = m[i][col].clone();
            for j in col..ncols {
                let delta = &factor * &m[r][j];
                m[i][j] = &m[i][j] - &delta;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Basis of `{v : A v = 0}` for an `m × ncols` matrix `A`.
pub fn kernel(rows: &[Vec<FieldElem>], ncols: usize, field: Field) -> Rows {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); ncols];
            v[f] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[r][f];
            }
            v
        })
        .collect()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(rows: &[Vec<FieldElem>], field: Field) -> Option<Rows> {
    let n = rows.len();
    let mut aug: Rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(field: Field, v: &[&[i64]]) -> Rows {
        v.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect()
    }

    /// Leibniz expansion, independent of elimination.
    fn leibniz(m: &Rows, field: Field) -> FieldElem {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.len();
        let mut acc = field.zero();
        for p in perms(n) {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let mut term = field.one();
            for i in 0..n {
                term = &term * &m[i][p[i]];
            }
            acc = if inversions % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn determinant_matches_leibniz() {
        let q = Field::Rational;
        let cases: Vec<Rows> = vec![
            rows(q, &[&[1, 0, -1], &[2, 0, 0], &[0, 2, 0]]),
            rows(q, &[&[0, 1, 2, 3], &[4, 0, 6, 7], &[8, 9, 0, 1], &[2, 3, 4, 0]]),
            rows(q, &[&[1, 2], &[2, 4]]),
            rows(q, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]),
        ];
        for c in &cases {
            assert_eq!(determinant(c, q), leibniz(c, q));
        }
        assert_eq!(determinant(&cases[0], q), q.from_i64(-4));
        let f = Field::Prime(7);
        let m = rows(f, &[&[3, 5, 1], &[6, 2, 2], &[1, 1, 4]]);
        assert_eq!(determinant(&m, f), leibniz(&m, f));
    }

    #[test]
    fn rank_and_kernel() {
        let q = Field::Rational;
        let m = rows(q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m, q), 2);
        let k = kernel(&m, 3, q);
        assert_eq!(k.len(), 1);
        for r in &m {
            let dot = r.iter().zip(&k[0]).fold(q.zero(), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::Prime(101);
        let m = rows(f, &[&[2, 3], &[5, 7]]);
        let inv = inverse(&m, f).unwrap();
        let prod: Rows = (0..2)
            .map(|i| (0..2).map(|j| (0..2).fold(f.zero(), |acc, k| &acc + &(&m[i][k] * &inv[k][j]))).collect())
            .collect();
        assert_eq!(prod, rows(f, &[&[1, 0], &[0, 1]]));
        assert!(inverse(&rows(f, &[&[1, 2], &[2, 4]]), f).is_none());
    }
}
