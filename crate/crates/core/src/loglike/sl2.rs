//! Exhaustive checks on `sl_2` in characteristic 2, over `F_2` and `F_4`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

/// `F_4 = {0, 1, ω, ω + 1}` encoded as `0, 1, 2, 3`; addition is XOR.
const F4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

type M2 = [u8; 4];

fn add(x: M2, y: M2) -> M2 {
    [x[0] ^ y[0], x[1] ^ y[1], x[2] ^ y[2], x[3] ^ y[3]]
}

fn mul(x: M2, y: M2) -> M2 {
    let m = |a: u8, b: u8| F4_MUL[a as usize][b as usize];
    [
        m(x[0], y[0]) ^ m(x[1], y[2]),
        m(x[0], y[1]) ^ m(x[1], y[3]),
        m(x[2], y[0]) ^ m(x[3], y[2]),
        m(x[2], y[1]) ^ m(x[3], y[3]),
    ]
}

fn bracket(x: M2, y: M2) -> M2 {
    // -1 = 1 in characteristic 2.
    add(mul(x, y), mul(y, x))
}

fn det(x: M2) -> u8 {
    F4_MUL[x[0] as usize][x[3] as usize] ^ F4_MUL[x[1] as usize][x[2] as usize]
}

const ZERO: M2 = [0; 4];

fn scalar(a: u8) -> M2 {
    [a, 0, 0, a]
}

fn pow(x: M2, k: u32) -> M2 {
    (0..k).fold(scalar(1), |acc, _| mul(acc, x))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl2FieldCheck {
    pub q: u8,
    pub elements: usize,
    pub ad_cubed_zero: bool,
    /// `ad(x)² = 0` already holds, as `x² = det(x) I` when the trace vanishes.
    pub ad_squared_zero: bool,
    pub center_size: usize,
    pub center_is_scalars: bool,
    pub semisimple_equals_center: bool,
    /// `3 - dim G_x`, with `dim G_x` read off `|G_x(F_q)|`.
    pub orbit_dims: BTreeSet<usize>,
    /// `dim 𝔤_x`, larger than `dim G_x` off the centre.
    pub lie_centralizer_dims: BTreeSet<usize>,
    pub level_zero_is_center: bool,
    pub group_order: usize,
    pub group_center_size: usize,
}

impl Sl2FieldCheck {
    pub fn holds(&self) -> bool {
        self.elements == (self.q as usize).pow(3)
            && self.ad_cubed_zero
            && self.center_is_scalars
            && self.semisimple_equals_center
            && self.orbit_dims == BTreeSet::from([0, 2])
            && self.level_zero_is_center
    }
}

fn check_field(q: u8) -> Sl2FieldCheck {
    // Trace zero means d = a.
    let sl2: Vec<M2> = (0..q).flat_map(|a| (0..q).flat_map(move |b| (0..q).map(move |c| [a, b, c, a]))).collect();
    let ad_k = |x: M2, y: M2, k: usize| (0..k).fold(y, |acc, _| bracket(x, acc));
    let ad_cubed_zero = sl2.iter().all(|&x| sl2.iter().all(|&y| ad_k(x, y, 3) == ZERO));
    let ad_squared_zero = sl2.iter().all(|&x| sl2.iter().all(|&y| ad_k(x, y, 2) == ZERO));
    let center: BTreeSet<M2> = sl2.iter().copied().filter(|&z| sl2.iter().all(|&x| bracket(z, x) == ZERO)).collect();
    let scalars: BTreeSet<M2> = (0..q).map(scalar).collect();
    // Over F_q, x is semisimple iff F_q[x] is reduced iff x^(q²) = x for 2x2 x.
    let semisimple: BTreeSet<M2> = sl2.iter().copied().filter(|&x| pow(x, (q as u32).pow(2)) == x).collect();
    let group: Vec<M2> = (0..q)
        .flat_map(|a| (0..q).flat_map(move |b| (0..q).flat_map(move |c| (0..q).map(move |d| [a, b, c, d]))))
        .filter(|&g| det(g) == 1)
        .collect();
    let group_center_size = group.iter().filter(|&&z| group.iter().all(|&g| mul(z, g) == mul(g, z))).count();
    let log_q = |count: usize| ((count as f64).ln() / (q as f64).ln()).round() as usize;
    let mut orbit_dims = BTreeSet::new();
    let mut lie_centralizer_dims = BTreeSet::new();
    let mut level_zero = BTreeSet::new();
    for &x in &sl2 {
        let fixing = group.iter().filter(|&&g| mul(g, x) == mul(x, g)).count();
        let dim = 3 - log_q(fixing);
        orbit_dims.insert(dim);
        if dim == 0 {
            level_zero.insert(x);
        }
        // 𝔤_x is a subspace, so its size is an exact power of q.
        let commuting = sl2.iter().filter(|&&y| bracket(x, y) == ZERO).count();
        lie_centralizer_dims.insert(log_q(commuting));
    }
    Sl2FieldCheck {
        q,
        elements: sl2.len(),
        ad_cubed_zero,
        ad_squared_zero,
        center_size: center.len(),
        center_is_scalars: center == scalars,
        semisimple_equals_center: semisimple == center,
        orbit_dims,
        lie_centralizer_dims,
        level_zero_is_center: level_zero == center,
        group_order: group.len(),
        group_center_size,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl2Char2Report {
    pub fields: Vec<Sl2FieldCheck>,
    /// Recorded, not computed.
    pub conclusion: String,
}

impl Sl2Char2Report {
    pub fn holds(&self) -> bool {
        self.fields.iter().all(Sl2FieldCheck::holds)
    }
}

pub fn sl2_char2_report() -> Sl2Char2Report {
    Sl2Char2Report {
        fields: vec![check_field(2), check_field(4)],
        conclusion: "the zero-dimensional level set of sl2 is the line of scalars while the \
                     centre of SL2 is trivial, so no log-like map exists in characteristic 2"
            .into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_is_a_field() {
        for a in 1..4u8 {
            assert!((1..4u8).any(|b| F4_MUL[a as usize][b as usize] == 1));
            for b in 0..4u8 {
                for c in 0..4u8 {
                    let lhs = F4_MUL[a as usize][(b ^ c) as usize];
                    let rhs = F4_MUL[a as usize][b as usize] ^ F4_MUL[a as usize][c as usize];
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn report() {
        let r = sl2_char2_report();
        assert!(r.holds(), "{r:?}");
        let f4 = &r.fields[1];
        assert_eq!(f4.elements, 64);
        assert_eq!(f4.center_size, 4);
        assert_eq!(f4.group_order, 60);
        assert_eq!(f4.group_center_size, 1);
        assert!(f4.ad_squared_zero);
        assert_eq!(f4.lie_centralizer_dims, BTreeSet::from([2, 3]));
    }
}
