//! Matrices over small finite fields: brute-force grouping by Jordan
//! pattern and exact point counts of decomposition classes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::modp::{jordan_type, Mat};
use crate::jclass::{ClassDatum, Mode, Slot};
use crate::partition::Partition;

/// Characteristic polynomial of a matrix of size at most 3, coefficients
/// from the constant term up.
fn char_poly_small(a: &Mat, p: u64) -> Vec<u64> {
    let n = a.len();
    let neg = |x: u64| (p - x % p) % p;
    match n {
        1 => vec![neg(a[0][0]), 1],
        2 => {
            let tr = (a[0][0] + a[1][1]) % p;
            let det = (a[0][0] * a[1][1] + p * p - a[0][1] * a[1][0]) % p;
            vec![det, neg(tr), 1]
        }
        3 => {
            let tr = (a[0][0] + a[1][1] + a[2][2]) % p;
            let m2 = |i: usize, j: usize| (a[i][i] * a[j][j] + p * p - a[i][j] * a[j][i]) % p;
            let c1 = (m2(0, 1) + m2(0, 2) + m2(1, 2)) % p;
            let det = {
                let t =
                    |i: usize, j: usize, k: usize| a[0][i] * ((a[1][j] * a[2][k] + p * p - a[1][k] * a[2][j]) % p) % p;
                (t(0, 1, 2) + p - t(1, 0, 2) + t(2, 0, 1)) % p
            };
            vec![neg(det), c1, neg(tr), 1]
        }
        _ => panic!("sizes 1 to 3 only"),
    }
}

/// The class datum of `a` read off its characteristic polynomial: each
/// root in `F_p` gives one slot from kernel ranks, and the rootless
/// remainder of degree `d` (irreducible, multiplicity one for `n ≤ 3`)
/// gives `d` slots `(1, (1))`.
pub fn datum_of(a: &Mat, p: u64) -> ClassDatum {
    let f = char_poly_small(a, p);
    let eval = |x: u64| f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p);
    let mut slots = Vec::new();
    let mut split = 0;
    for x in 0..p {
        if eval(x) == 0 {
            let mu = jordan_type(a, x, p);
            split += mu.size();
            slots.push(Slot::new(mu).expect("eigenvalue"));
        }
    }
    for _ in split..a.len() {
        slots.push(Slot::new(Partition::trivial(1)).expect("nonempty"));
    }
    ClassDatum::new(Mode::Liealg, slots).expect("nonempty")
}

/// Number of matrices in `gl_n(F_p)` with each class datum, for `n ≤ 3`.
pub fn brute_force_counts(n: usize, p: u64) -> BTreeMap<ClassDatum, u64> {
    assert!((1..=3).contains(&n), "sizes 1 to 3 only");
    let total = p.pow((n * n) as u32);
    (0..total)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<ClassDatum, u64>, code| {
            let mut c = code;
            let a: Mat = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let x = c % p;
                            c /= p;
                            x
                        })
                        .collect()
                })
                .collect();
            *acc.entry(datum_of(&a, p)).or_default() += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        })
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn mobius(n: u64) -> i64 {
    let (mut n, mut k, mut sign) = (n, 2, 1);
    while k * k <= n {
        if n % k == 0 {
            n /= k;
            if n % k == 0 {
                return 0;
            }
            sign = -sign;
        }
        k += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

/// Monic irreducible polynomials of degree `d` over `F_q`.
fn irreducible_count(q: &BigInt, d: u64) -> BigRational {
    let s: BigInt = (1..=d).filter(|e| d % e == 0).map(|e| BigInt::from(mobius(e)) * q.pow((d / e) as u32)).sum();
    BigRational::new(s, d.into())
}

/// `|GL_n(F_q)|`.
pub fn gl_order(n: usize, q: &BigInt) -> BigInt {
    let qn = q.pow(n as u32);
    (0..n).map(|i| &qn - q.pow(i as u32)).product()
}

/// Automorphisms of `⊕_i F_Q[t]/(t^{μ_i})`.
fn aut_order(mu: &Partition, big_q: &BigInt) -> BigRational {
    let qq = BigRational::from_integer(big_q.clone());
    let t = mu.transpose();
    let e: u32 = t.parts().iter().map(|&x| (x * x) as u32).sum();
    let mut out = BigRational::from_integer(big_q.pow(e));
    let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
    for &x in mu.parts() {
        *counts.entry(x).or_default() += 1;
    }
    for r in counts.into_values() {
        for k in 1..=r {
            out *= BigRational::one() - qq.pow(-(k as i32));
        }
    }
    out
}

fn integer_partitions(k: usize) -> Vec<Vec<usize>> {
    Partition::all(k).into_iter().map(|p| p.parts().to_vec()).collect()
}

/// Number of points of the decomposition class `datum` in `gl_n(F_q)`: a
/// sum over the ways Frobenius can permute equal slots, each orbit of size
/// `d` taking an irreducible polynomial of degree `d`.
pub fn class_point_count(datum: &ClassDatum, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let mut groups: BTreeMap<&Slot, usize> = BTreeMap::new();
    for s in datum.slots() {
        *groups.entry(s).or_default() += 1;
    }
    let groups: Vec<(&Slot, usize)> = groups.into_iter().collect();
    let options: Vec<Vec<Vec<usize>>> = groups.iter().map(|&(_, k)| integer_partitions(k)).collect();
    let gl = BigRational::from_integer(gl_order(datum.n(), &q));
    let mut total = BigRational::zero();
    let mut choice = vec![0usize; groups.len()];
    loop {
        let mut orbits_of_degree: BTreeMap<usize, usize> = BTreeMap::new();
        let mut weight = BigRational::one();
        for (g, (&(slot, _), opts)) in groups.iter().zip(&options).enumerate() {
            let lambda = &opts[choice[g]];
            let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
            for &d in lambda {
                *orbits_of_degree.entry(d).or_default() += 1;
                *mult.entry(d).or_default() += 1;
                weight /= aut_order(slot.mu(), &q.pow(d as u32));
            }
            for m in mult.into_values() {
                weight /= rat((1..=m as i64).product());
            }
        }
        for (d, t) in orbits_of_degree {
            let irr = irreducible_count(&q, d as u64);
            for k in 0..t {
                weight *= &irr - rat(k as i64);
            }
        }
        total += weight * &gl;
        let mut k = 0;
        loop {
            if k == choice.len() {
                assert!(total.is_integer(), "point counts are integers");
                return total.to_integer();
            }
            choice[k] += 1;
            if choice[k] < options[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Degree of growth of `N(q)` from counts at three increasing `q`: the
/// log-slopes of consecutive pairs are extrapolated linearly in `1/q` to
/// `q = ∞`.
pub fn estimate_degree(points: &[(u64, BigInt); 3]) -> f64 {
    let ln = |x: &BigInt| {
        let bits = x.bits();
        let shift = bits.saturating_sub(60);
        (x >> shift).to_f64().expect("fits").ln() + shift as f64 * std::f64::consts::LN_2
    };
    let slope = |(q1, n1): &(u64, BigInt), (q2, n2): &(u64, BigInt)| {
        let s = (ln(n2) - ln(n1)) / ((*q2 as f64).ln() - (*q1 as f64).ln());
        (s, 1.0 / ((*q1 as f64) * (*q2 as f64)).sqrt())
    };
    let (s1, x1) = slope(&points[0], &points[1]);
    let (s2, x2) = slope(&points[1], &points[2]);
    s2 - (s1 - s2) * x2 / (x1 - x2)
}

/// Exact degree of the polynomial through `(q_i, N_i)`, by Newton divided
/// differences; enough points must be supplied.
pub fn interpolated_degree(points: &[(u64, BigInt)]) -> usize {
    let xs: Vec<BigRational> = points.iter().map(|(q, _)| rat(*q as i64)).collect();
    let mut col: Vec<BigRational> = points.iter().map(|(_, v)| BigRational::from_integer(v.clone())).collect();
    let mut leading = vec![col[0].clone()];
    for level in 1..points.len() {
        col = (0..col.len() - 1).map(|i| (&col[i + 1] - &col[i]) / (&xs[i + level] - &xs[i])).collect();
        leading.push(col[0].clone());
    }
    leading.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jclass::enumerate_classes;

    #[test]
    fn mobius_values() {
        assert_eq!([1, 2, 3, 4, 5, 6].map(mobius), [1, -1, -1, 0, -1, 1]);
        assert_eq!(irreducible_count(&BigInt::from(2), 3), rat(2));
    }

    #[test]
    fn counts_sum_to_all_matrices() {
        for n in 1..=4 {
            for q in [2u64, 3, 5] {
                let s: BigInt =
                    enumerate_classes(n, Mode::Liealg).unwrap().iter().map(|d| class_point_count(d, q)).sum();
                assert_eq!(s, BigInt::from(q).pow((n * n) as u32), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn brute_force_gl2() {
        let counts = brute_force_counts(2, 3);
        assert_eq!(counts.len(), 3);
        for (d, c) in counts {
            assert_eq!(class_point_count(&d, 3), BigInt::from(c), "{d}");
        }
    }

    #[test]
    fn degrees() {
        let pts: Vec<(u64, BigInt)> = [2u64, 3, 4, 5, 6].iter().map(|&q| (q, BigInt::from(q * q * q - q))).collect();
        assert_eq!(interpolated_degree(&pts), 3);
        let three = [(5, BigInt::from(120)), (7, BigInt::from(336)), (11, BigInt::from(1320))];
        assert!((estimate_degree(&three) - 3.0).abs() < 0.2);
    }
}
