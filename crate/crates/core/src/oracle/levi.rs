use std::collections::{BTreeSet, VecDeque};

use crate::rootcore::RootSystem;

/// All subsets of the roots closed under negation, as sorted index lists:
/// one for each subset of the positive roots.
pub fn symmetric_subsets(rs: &RootSystem) -> Vec<Vec<usize>> {
    let positive: Vec<usize> = (0..rs.num_roots()).filter(|&i| rs.is_positive(i)).collect();
    assert!(positive.len() < 20, "too many subsets");
    (0u32..1 << positive.len())
        .map(|mask| {
            let mut set: Vec<usize> = positive
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .flat_map(|(_, &i)| [i, rs.negate(i)])
                .collect();
            set.sort_unstable();
            set
        })
        .collect()
}

/// Coordinates of the sum of two roots, looked up among the roots.
fn add(rs: &RootSystem, a: usize, b: usize) -> Option<usize> {
    let v: Vec<i64> = rs.root(a).iter().zip(rs.root(b)).map(|(x, y)| x + y).collect();
    rs.index_of(&v)
}

pub fn is_closed(rs: &RootSystem, set: &[usize]) -> bool {
    set.iter().all(|&a| {
        set.iter().all(|&b| match add(rs, a, b) {
            Some(c) => set.binary_search(&c).is_ok(),
            None => true,
        })
    })
}

/// `s_i(β) = β - ⟨β, α_i^∨⟩ α_i` on coordinates.
fn reflect(rs: &RootSystem, i: usize, beta: usize) -> usize {
    let b = rs.root(beta);
    let gram = rs.gram();
    let pairing: i64 = (0..rs.rank()).map(|j| 2 * gram[i][j] * b[j]).sum::<i64>() / gram[i][i];
    let mut v = b.to_vec();
    v[i] -= pairing;
    rs.index_of(&v).expect("reflections permute roots")
}

/// Roots supported on the simple roots in `mask`.
fn standard_levi(rs: &RootSystem, mask: u32) -> BTreeSet<usize> {
    (0..rs.num_roots()).filter(|&a| rs.root(a).iter().enumerate().all(|(i, &c)| c == 0 || mask >> i & 1 == 1)).collect()
}

/// Whether some Weyl group element maps `set` onto a standard Levi
/// subsystem. The orbit of `set` is explored by simple reflections.
pub fn conjugate_to_standard_levi(rs: &RootSystem, set: &[usize]) -> bool {
    let levis: BTreeSet<BTreeSet<usize>> = (0u32..1 << rs.rank()).map(|m| standard_levi(rs, m)).collect();
    let start: BTreeSet<usize> = set.iter().copied().collect();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        if levis.contains(&s) {
            return true;
        }
        for i in 0..rs.rank() {
            let t: BTreeSet<usize> = s.iter().map(|&b| reflect(rs, i, b)).collect();
            if seen.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2() {
        let rs = RootSystem::from_label("C2").unwrap();
        let subsets = symmetric_subsets(&rs);
        assert_eq!(subsets.len(), 16);
        let closed: Vec<_> = subsets.iter().filter(|s| is_closed(&rs, s)).collect();
        // ∅, four A1, long A1xA1, C2.
        assert_eq!(closed.len(), 7);
        let levi = closed.iter().filter(|s| conjugate_to_standard_levi(&rs, s)).count();
        assert_eq!(levi, 6);
    }
}
