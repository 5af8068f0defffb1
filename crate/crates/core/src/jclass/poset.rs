use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::closure::{closure_contains, regular_closure_contains};
use super::datum::{enumerate_classes, ClassDatum, Mode};
use crate::error::{Error, Result};

/// Largest `n` for which the class poset is built.
pub const POSET_CAP: usize = 6;

/// The classes of size `n` with the closure order and the regular-closure
/// order as relation matrices: `closure[a][b]` holds when class `a` lies in
/// the closure of class `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPoset {
    pub n: usize,
    pub mode: Mode,
    pub classes: Vec<ClassDatum>,
    pub closure: Vec<Vec<bool>>,
    pub regular: Vec<Vec<bool>>,
}

fn relation(classes: &[ClassDatum], test: fn(&ClassDatum, &ClassDatum) -> Result<bool>) -> Vec<Vec<bool>> {
    classes.par_iter().map(|a| classes.iter().map(|b| test(b, a).expect("same n and mode")).collect()).collect()
}

fn strict_pairs(rel: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a, row) in rel.iter().enumerate() {
        for (b, &x) in row.iter().enumerate() {
            if x && a != b {
                out.push((a, b));
            }
        }
    }
    out
}

impl ClassPoset {
    pub fn build(n: usize, mode: Mode) -> Result<ClassPoset> {
        if n == 0 || n > POSET_CAP {
            return Err(Error::CapExceeded { what: "class poset n", cap: POSET_CAP, got: n });
        }
        let classes = enumerate_classes(n, mode)?;
        let closure = relation(&classes, closure_contains);
        let regular = relation(&classes, regular_closure_contains);
        Ok(ClassPoset { n, mode, classes, closure, regular })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn index_of(&self, c: &ClassDatum) -> Option<usize> {
        self.classes.iter().position(|x| x == c)
    }

    /// `(a, b)` with `a ≠ b` and `a` in the closure of `b`.
    pub fn closure_pairs(&self) -> Vec<(usize, usize)> {
        strict_pairs(&self.closure)
    }

    pub fn regular_pairs(&self) -> Vec<(usize, usize)> {
        strict_pairs(&self.regular)
    }

    /// Covering pairs of the closure order.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        self.closure_pairs()
            .into_iter()
            .filter(|&(a, b)| !(0..k).any(|c| c != a && c != b && self.closure[a][c] && self.closure[c][b]))
            .collect()
    }

    fn antisymmetric(rel: &[Vec<bool>]) -> bool {
        strict_pairs(rel).iter().all(|&(a, b)| !rel[b][a])
    }

    fn transitive(rel: &[Vec<bool>]) -> bool {
        let k = rel.len();
        (0..k).all(|a| (0..k).all(|b| !rel[a][b] || (0..k).all(|c| !rel[b][c] || rel[a][c])))
    }

    /// Reflexive, antisymmetric and transitive, for both orders.
    pub fn is_partial_order(&self) -> bool {
        [&self.closure, &self.regular]
            .iter()
            .all(|rel| (0..self.len()).all(|a| rel[a][a]) && Self::antisymmetric(rel) && Self::transitive(rel))
    }

    /// Classes maximal for the regular-closure order.
    pub fn maximal_regular(&self) -> Vec<ClassDatum> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| b == a || !self.regular[a][b]))
            .map(|a| self.classes[a].clone())
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct PosetRepr {
    n: usize,
    mode: Mode,
    classes: Vec<ClassDatum>,
    closure: Vec<(usize, usize)>,
    regular: Vec<(usize, usize)>,
    hasse: Vec<(usize, usize)>,
}

impl Serialize for ClassPoset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PosetRepr {
            n: self.n,
            mode: self.mode,
            classes: self.classes.clone(),
            closure: self.closure_pairs(),
            regular: self.regular_pairs(),
            hasse: self.hasse(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassPoset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PosetRepr::deserialize(d)?;
        let k = r.classes.len();
        let mut closure = vec![vec![false; k]; k];
        let mut regular = vec![vec![false; k]; k];
        for a in 0..k {
            closure[a][a] = true;
            regular[a][a] = true;
        }
        for (rel, pairs) in [(&mut closure, &r.closure), (&mut regular, &r.regular)] {
            for &(a, b) in pairs {
                if a >= k || b >= k {
                    return Err(serde::de::Error::custom("edge index out of range"));
                }
                rel[a][b] = true;
            }
        }
        Ok(ClassPoset { n: r.n, mode: r.mode, classes: r.classes, closure, regular })
    }
}

/// Sheets: regular closures of the classes maximal for the regular-closure
/// order, listed by those classes.
pub fn sheets(n: usize, mode: Mode) -> Result<Vec<ClassDatum>> {
    Ok(ClassPoset::build(n, mode)?.maximal_regular())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    #[test]
    fn gl2() {
        let poset = ClassPoset::build(2, Mode::Liealg).unwrap();
        assert!(poset.is_partial_order());
        let reg_ss = ClassDatum::from_parts(Mode::Liealg, &[(1, &[1]), (1, &[1])]).unwrap();
        let top = poset.index_of(&reg_ss).unwrap();
        for a in 0..poset.len() {
            assert!(poset.closure[a][top]);
        }
        assert_eq!(sheets(2, Mode::Liealg).unwrap().len(), 2);
        assert_eq!(sheets(1, Mode::Group).unwrap().len(), 1);
    }

    #[test]
    fn center_is_bottom() {
        for n in 1..=4 {
            let poset = ClassPoset::build(n, Mode::Group).unwrap();
            let bottom = poset.index_of(&ClassDatum::central(n, Mode::Group)).unwrap();
            assert!((0..poset.len()).all(|b| poset.closure[bottom][b]));
        }
    }

    #[test]
    fn sheet_count_is_partition_count() {
        for n in 1..=5 {
            assert_eq!(sheets(n, Mode::Liealg).unwrap().len(), Partition::count(n));
        }
    }

    #[test]
    fn json_roundtrip() {
        let poset = ClassPoset::build(3, Mode::Group).unwrap();
        let s = serde_json::to_string(&poset).unwrap();
        assert_eq!(serde_json::from_str::<ClassPoset>(&s).unwrap(), poset);
    }
}
