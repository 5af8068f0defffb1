//! Closure of decomposition classes by explicit degeneration. For every
//! way of letting the eigenvalues of a class collide onto those of a
//! pattern, a one-parameter family `x(t)` is built whose members for
//! `t ≠ 0` lie in the class; the limit `x(0)` is compared with the pattern
//! through the ranks of `(x - β)^k`, which decide orbit closure among
//! matrices with the same characteristic polynomial.

use rand::Rng;

use super::modp::{jordan_block, jordan_type, rank_powers, Mat};
use crate::jclass::ClassDatum;

/// Field used for the families.
pub const P: u64 = 101;

/// Block upper-triangular family: slot `i` sits on the diagonal as
/// `(β_{φ(i)} + t c_i) I + N_{μ_i}`, blocks sharing a target are coupled by
/// random entries above the diagonal.
fn family<R: Rng + ?Sized>(j: &ClassDatum, phi: &[usize], t: u64, rng: &mut R) -> Mat {
    let n = j.n();
    let mut order: Vec<usize> = (0..phi.len()).collect();
    order.sort_by_key(|&i| phi[i]);
    let mut a = vec![vec![0u64; n]; n];
    let mut owner = Vec::with_capacity(n);
    let mut offset = 0;
    for (pos, &i) in order.iter().enumerate() {
        let slot = &j.slots()[i];
        let eig = (phi[i] as u64 + 1 + t * (pos as u64 + 1) * 7) % P;
        for &k in slot.mu().parts() {
            let block = jordan_block(eig, k);
            for r in 0..k {
                for c in 0..k {
                    a[offset + r][offset + c] = block[r][c];
                }
                owner.push((phi[i], pos));
            }
            offset += k;
        }
    }
    for r in 0..n {
        for c in 0..n {
            if owner[r].0 == owner[c].0 && owner[r].1 < owner[c].1 {
                a[r][c] = rng.gen_range(0..P);
            }
        }
    }
    a
}

fn pattern_matrix(p: &ClassDatum) -> Mat {
    let n = p.n();
    let mut a = vec![vec![0u64; n]; n];
    let mut offset = 0;
    for (b, slot) in p.slots().iter().enumerate() {
        for &k in slot.mu().parts() {
            let block = jordan_block(b as u64 + 1, k);
            for r in 0..k {
                for c in 0..k {
                    a[offset + r][offset + c] = block[r][c];
                }
            }
            offset += k;
        }
    }
    a
}

/// Slots of the matrix by brute force over the eigenvalues used.
fn slots_of(a: &Mat) -> Vec<(usize, Vec<usize>)> {
    let mut out: Vec<(usize, Vec<usize>)> = (0..P)
        .map(|x| jordan_type(a, x, P))
        .filter(|mu| !mu.is_empty())
        .map(|mu| (mu.size(), mu.parts().to_vec()))
        .collect();
    out.sort();
    out
}

/// Every map from the slots of `j` onto the slots of `p` with matching
/// total sizes.
fn merges(j: &ClassDatum, p: &ClassDatum) -> Vec<Vec<usize>> {
    let (r, s) = (j.slots().len(), p.slots().len());
    let mut out = Vec::new();
    let mut phi = vec![0usize; r];
    loop {
        let mut sizes = vec![0usize; s];
        for (i, &a) in phi.iter().enumerate() {
            sizes[a] += j.slots()[i].m();
        }
        if sizes.iter().zip(p.slots()).all(|(&m, t)| m == t.m()) {
            out.push(phi.clone());
        }
        let mut k = 0;
        loop {
            if k == r {
                return out;
            }
            phi[k] += 1;
            if phi[k] < s {
                break;
            }
            phi[k] = 0;
            k += 1;
        }
    }
}

/// Whether points of pattern `p` are limits of points of class `j`.
/// `samples` random couplings are tried per collision map.
pub fn closure_by_specialization<R: Rng + ?Sized>(j: &ClassDatum, p: &ClassDatum, samples: usize, rng: &mut R) -> bool {
    assert_eq!(j.n(), p.n());
    let y = pattern_matrix(p);
    let targets: Vec<u64> = (1..=p.slots().len() as u64).collect();
    let mut expected: Vec<(usize, Vec<usize>)> = j.slots().iter().map(|s| (s.m(), s.mu().parts().to_vec())).collect();
    expected.sort();
    merges(j, p).into_iter().any(|phi| {
        // Away from t = 0 the family stays inside the class, unless the
        // shifted eigenvalues happen to collide mod P.
        let inside = (0..20).any(|_| slots_of(&family(j, &phi, 1 + rng.gen_range(0..P - 1), rng)) == expected);
        assert!(inside, "family leaves the class");
        let mut best: Vec<Vec<usize>> = targets.iter().map(|_| vec![0; j.n() + 1]).collect();
        for _ in 0..samples {
            let x0 = family(j, &phi, 0, rng);
            for (a, &beta) in targets.iter().enumerate() {
                for (k, r) in rank_powers(&x0, beta, P).into_iter().enumerate() {
                    best[a][k] = best[a][k].max(r);
                }
            }
        }
        targets
            .iter()
            .enumerate()
            .all(|(a, &beta)| rank_powers(&y, beta, P).iter().zip(&best[a]).all(|(ry, rx)| ry <= rx))
    })
}
