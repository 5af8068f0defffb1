use std::collections::HashSet;

use super::RootSystem;

/// Largest rank for which the Weyl group is enumerated.
pub const WEYL_RANK_CAP: usize = 4;

/// The Weyl group as permutations of root indices.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<Vec<u16>>,
}

impl WeylGroup {
    pub(super) fn generate(rs: &RootSystem) -> WeylGroup {
        let n = rs.num_roots();
        let simple: Vec<Vec<u16>> = (0..rs.rank()).map(|a| (0..n).map(|b| rs.reflect(a, b) as u16).collect()).collect();
        let identity: Vec<u16> = (0..n as u16).collect();
        let mut seen: HashSet<Vec<u16>> = HashSet::from([identity.clone()]);
        let mut elements = vec![identity];
        let mut k = 0;
        while k < elements.len() {
            for s in &simple {
                let w: Vec<u16> = elements[k].iter().map(|&i| s[i as usize]).collect();
                if seen.insert(w.clone()) {
                    elements.push(w);
                }
            }
            k += 1;
        }
        WeylGroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = &[u16]> {
        self.elements.iter().map(Vec::as_slice)
    }

    /// Whether some `w` maps every root in `roots` to a simple root.
    pub fn maps_into_simple(&self, roots: &[usize], rank: usize) -> bool {
        self.elements.iter().any(|w| roots.iter().all(|&r| (w[r] as usize) < rank))
    }
}

#[cfg(test)]
mod tests {
    use crate::rootcore::RootSystem;

    #[test]
    fn orders() {
        for (label, order) in [("A1", 2), ("A3", 24), ("B3", 48), ("C2", 8), ("G2", 12), ("F4", 1152), ("D4", 192)] {
            let rs = RootSystem::from_label(label).unwrap();
            assert_eq!(rs.weyl_group().unwrap().order(), order, "{label}");
        }
        assert!(RootSystem::from_label("A5").unwrap().weyl_group().is_err());
    }
}
