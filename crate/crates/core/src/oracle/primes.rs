use crate::rootcore::RootSystem;

/// Flags of a prime computed from root data alone: `p` is bad when it
/// divides a coefficient of a highest root, torsion when it divides a
/// coefficient of the corresponding highest coroot (or the given order of
/// the fundamental group). A component whose highest root has all
/// coefficients one is of type A, where very good also asks `p ∤ det C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeTruth {
    pub good: bool,
    pub very_good: bool,
    pub torsion: bool,
}

fn det(mut m: Vec<Vec<i128>>) -> i128 {
    // Bareiss elimination.
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

pub fn prime_truth(rs: &RootSystem, p: u64, fundamental_group_order: Option<u64>) -> PrimeTruth {
    let p = p as i64;
    let mut good = true;
    let mut very_good = true;
    let mut torsion = fundamental_group_order.is_some_and(|f| f as i64 % p == 0);
    for c in 0..rs.components().len() {
        let range = rs.component_range(c);
        let theta = rs.highest_root(c);
        let coeffs: Vec<i64> = range.clone().map(|i| rs.root(theta)[i]).collect();
        let theta_len = rs.gram()[range.start..range.end]
            .iter()
            .zip(&coeffs)
            .map(|(row, &ci)| row[range.clone()].iter().zip(&coeffs).map(|(&g, &cj)| g * ci * cj).sum::<i64>())
            .sum::<i64>();
        let co: Vec<i64> = range.clone().zip(&coeffs).map(|(i, &ci)| ci * rs.gram()[i][i] / theta_len).collect();
        let bad = coeffs.iter().any(|&x| x % p == 0);
        good &= !bad;
        torsion |= co.iter().any(|&x| x % p == 0);
        if coeffs.iter().all(|&x| x == 1) {
            let cartan: Vec<Vec<i128>> = range
                .clone()
                .map(|i| range.clone().map(|j| 2 * rs.gram()[i][j] as i128 / rs.gram()[i][i] as i128).collect())
                .collect();
            very_good &= det(cartan) % p as i128 != 0;
        }
    }
    PrimeTruth { good, very_good: good && very_good, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples() {
        let t = |l: &str, p| prime_truth(&RootSystem::from_label(l).unwrap(), p, None);
        assert!(!t("E8", 5).good && t("E8", 5).torsion);
        assert!(t("C3", 2).torsion == false && !t("C3", 2).good);
        assert!(t("B3", 2).torsion && t("B2", 2).torsion == false);
        assert!(t("A3", 2).good && !t("A3", 2).very_good);
        assert!(t("G2", 2).torsion && !t("G2", 3).torsion && !t("G2", 3).good);
        assert!(t("F4", 3).torsion && !t("F4", 5).torsion);
    }
}
