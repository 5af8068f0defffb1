//! Dense matrices over `F_p` as rows of `u64`.

use crate::partition::Partition;

pub type Mat = Vec<Vec<u64>>;

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect()
}

pub fn mul(a: &Mat, b: &Mat, p: u64) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).fold(0, |acc, k| (acc + a[i][k] * b[k][j]) % p)).collect()).collect()
}

/// `a - c I`.
pub fn shift(a: &Mat, c: u64, p: u64) -> Mat {
    let mut out = a.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = (row[i] + p - c % p) % p;
    }
    out
}

pub fn inv(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

pub fn rank(a: &Mat, p: u64) -> usize {
    let mut m = a.clone();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let iv = inv(m[r][c], p);
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c] * iv % p;
                for k in c..cols {
                    m[i][k] = (m[i][k] + p - f * m[r][k] % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// `rank((a - c)^k)` for `k = 0..=n`.
pub fn rank_powers(a: &Mat, c: u64, p: u64) -> Vec<usize> {
    let n = a.len();
    let b = shift(a, c, p);
    let mut power = identity(n);
    let mut out = vec![n];
    for _ in 0..n {
        power = mul(&power, &b, p);
        out.push(rank(&power, p));
    }
    out
}

/// Jordan type at eigenvalue `c`, empty if `c` is not an eigenvalue.
pub fn jordan_type(a: &Mat, c: u64, p: u64) -> Partition {
    let ranks = rank_powers(a, c, p);
    let transpose: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).filter(|&d| d > 0).collect();
    Partition::new(transpose).expect("rank drops are nonincreasing").transpose()
}

/// Upper Jordan block `c I + N` of size `k`.
pub fn jordan_block(c: u64, k: usize) -> Mat {
    (0..k).map(|i| (0..k).map(|j| if i == j { c } else { u64::from(j == i + 1) }).collect()).collect()
}
