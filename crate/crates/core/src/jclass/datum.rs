use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::jordan::JordanData;
use crate::partition::Partition;

/// Largest `n` for which classes are enumerated.
pub const ENUMERATION_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Group,
    Liealg,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Group => "group",
            Mode::Liealg => "liealg",
        })
    }
}

/// One block `GL_m` of the Levi subgroup with the Jordan type `μ ⊢ m` of the
/// unipotent (or nilpotent) part on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(usize, Partition)", into = "(usize, Partition)")]
pub struct Slot {
    m: usize,
    mu: Partition,
}

impl Slot {
    pub fn new(mu: Partition) -> Result<Slot> {
        if mu.is_empty() {
            return Err(Error::InvalidClass("slot with an empty partition".into()));
        }
        Ok(Slot { m: mu.size(), mu })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }
}

impl Ord for Slot {
    /// `m` descending, then `μ` lexicographically.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.m.cmp(&self.m).then_with(|| self.mu.cmp(&other.mu))
    }
}

impl PartialOrd for Slot {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<(usize, Partition)> for Slot {
    type Error = Error;
    fn try_from((m, mu): (usize, Partition)) -> Result<Slot> {
        if mu.size() != m {
            return Err(Error::InvalidClass(format!("{mu} is not a partition of {m}")));
        }
        Slot::new(mu)
    }
}

impl From<Slot> for (usize, Partition) {
    fn from(s: Slot) -> Self {
        (s.m, s.mu)
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.mu)
    }
}

/// A Jordan class of `GL_n` (group mode) or a decomposition class of
/// `gl_n` (Lie algebra mode), as the multiset of its slots.
///
/// The eigenvalues are free parameters: distinct slots carry distinct
/// eigenvalues. Slots are kept sorted, so equal multisets are equal values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DatumRepr", into = "DatumRepr")]
pub struct ClassDatum {
    n: usize,
    mode: Mode,
    slots: Vec<Slot>,
}

/// The eigenvalue collision pattern and Jordan types of a single element;
/// the class datum of the class containing it.
pub type PointPattern = ClassDatum;

#[derive(Serialize, Deserialize)]
struct DatumRepr {
    n: usize,
    mode: Mode,
    slots: Vec<Slot>,
}

impl TryFrom<DatumRepr> for ClassDatum {
    type Error = Error;
    fn try_from(r: DatumRepr) -> Result<ClassDatum> {
        let d = ClassDatum::new(r.mode, r.slots)?;
        if d.n != r.n {
            return Err(Error::InvalidClass(format!("slots sum to {}, not n = {}", d.n, r.n)));
        }
        Ok(d)
    }
}

impl From<ClassDatum> for DatumRepr {
    fn from(d: ClassDatum) -> Self {
        DatumRepr { n: d.n, mode: d.mode, slots: d.slots }
    }
}

impl ClassDatum {
    pub fn new(mode: Mode, mut slots: Vec<Slot>) -> Result<ClassDatum> {
        if slots.is_empty() {
            return Err(Error::InvalidClass("no slots".into()));
        }
        slots.sort();
        let n = slots.iter().map(Slot::m).sum();
        Ok(ClassDatum { n, mode, slots })
    }

    /// Builds from `(m, parts)` pairs.
    pub fn from_parts(mode: Mode, slots: &[(usize, &[usize])]) -> Result<ClassDatum> {
        let slots = slots
            .iter()
            .map(|&(m, parts)| Slot::try_from((m, Partition::new(parts.to_vec())?)))
            .collect::<Result<Vec<_>>>()?;
        ClassDatum::new(mode, slots)
    }

    /// The center `{(n, (1^n))}`.
    pub fn central(n: usize, mode: Mode) -> ClassDatum {
        ClassDatum { n, mode, slots: vec![Slot { m: n, mu: Partition::trivial(n) }] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// Number of slots `r`, the dimension of the center of the Levi.
    pub fn r(&self) -> usize {
        self.slots.len()
    }

    pub fn with_mode(&self, mode: Mode) -> ClassDatum {
        ClassDatum { mode, ..self.clone() }
    }
}

impl fmt::Display for ClassDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slots: Vec<String> = self.slots.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", slots.join(","))
    }
}

/// A Levi subalgebra `gl_{d_1} × ... × gl_{d_k}` with a nilpotent orbit
/// `μ^(i) ⊢ d_i` in each block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeviShape {
    pub parts: Vec<Partition>,
}

impl LeviShape {
    pub fn new(parts: Vec<Partition>) -> Result<LeviShape> {
        if parts.is_empty() || parts.iter().any(Partition::is_empty) {
            return Err(Error::InvalidPartition("Levi blocks must be nonempty".into()));
        }
        Ok(LeviShape { parts })
    }

    /// From block sizes and matching partitions.
    pub fn from_blocks(blocks: &[usize], parts: Vec<Partition>) -> Result<LeviShape> {
        if blocks.len() != parts.len() {
            return Err(Error::DimensionMismatch(format!("{} blocks but {} partitions", blocks.len(), parts.len())));
        }
        for (d, mu) in blocks.iter().zip(&parts) {
            if mu.size() != *d {
                return Err(Error::InvalidPartition(format!("{mu} is not a partition of {d}")));
            }
        }
        LeviShape::new(parts)
    }

    pub fn composition(&self) -> Vec<usize> {
        self.parts.iter().map(Partition::size).collect()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(Partition::size).sum()
    }
}

/// Every Levi shape of `gl_n`: ordered block sizes with a partition of each.
pub fn levi_shapes(n: usize) -> Vec<LeviShape> {
    fn rec(rest: usize, cur: &mut Vec<Partition>, out: &mut Vec<LeviShape>) {
        if rest == 0 {
            out.push(LeviShape { parts: cur.clone() });
            return;
        }
        for d in 1..=rest {
            for mu in Partition::all(d) {
                cur.push(mu);
                rec(rest - d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// All slot types `(m, μ)` with `m ≤ n`, in canonical order.
fn slot_types(n: usize) -> Vec<Slot> {
    let mut out: Vec<Slot> =
        (1..=n).flat_map(|m| Partition::all(m).into_iter().map(move |mu| Slot { m, mu })).collect();
    out.sort();
    out
}

/// Every class datum of size `n`, sorted.
pub fn enumerate_classes(n: usize, mode: Mode) -> Result<Vec<ClassDatum>> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { what: "class enumeration n", cap: ENUMERATION_CAP, got: n });
    }
    fn rec(types: &[Slot], start: usize, rest: usize, cur: &mut Vec<Slot>, mode: Mode, out: &mut Vec<ClassDatum>) {
        if rest == 0 {
            out.push(ClassDatum::new(mode, cur.clone()).expect("nonempty"));
            return;
        }
        for (k, t) in types.iter().enumerate().skip(start) {
            if t.m <= rest {
                cur.push(t.clone());
                rec(types, k, rest - t.m, cur, mode, out);
                cur.pop();
            }
        }
    }
    let types = slot_types(n);
    let mut out = Vec::new();
    rec(&types, 0, n, &mut Vec::new(), mode, &mut out);
    out.sort();
    Ok(out)
}

/// `n² − Σ_i Σ_j ((μ^(i))ᵗ_j)²`.
pub fn dim_orbit(pp: &PointPattern) -> usize {
    let c: usize = pp.slots.iter().map(|s| s.mu.centralizer_dim()).sum();
    pp.n * pp.n - c
}

/// Orbit dimension plus the dimension `r` of the center of the Levi.
pub fn dim_class(j: &ClassDatum) -> usize {
    dim_orbit(j) + j.r()
}

/// Induced orbit from a Levi in type A: the componentwise sum of the
/// partitions.
pub fn induce(ls: &LeviShape) -> Partition {
    induce_parts(ls.parts.iter())
}

pub(crate) fn induce_parts<'a>(parts: impl Iterator<Item = &'a Partition>) -> Partition {
    parts.fold(Partition::row(0), |acc, mu| acc.row_sum(mu))
}

/// Forgets the eigenvalues of a Jordan certificate.
pub fn pattern_of(jd: &JordanData, mode: Mode) -> PointPattern {
    let slots = jd.blocks().iter().map(|(_, mu)| Slot::new(mu.clone()).expect("Jordan types are nonempty")).collect();
    ClassDatum::new(mode, slots).expect("Jordan data is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::Field;

    fn d(slots: &[(usize, &[usize])]) -> ClassDatum {
        ClassDatum::from_parts(Mode::Liealg, slots).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_classes(n, Mode::Group).unwrap().len()).collect();
        // Euler transform of the partition numbers.
        assert_eq!(counts, vec![1, 3, 6, 14, 27, 58]);
        assert_eq!(
            enumerate_classes(2, Mode::Liealg).unwrap(),
            vec![d(&[(2, &[1, 1])]), d(&[(2, &[2])]), d(&[(1, &[1]), (1, &[1])])]
        );
        assert!(enumerate_classes(9, Mode::Group).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_orbit(&ClassDatum::central(3, Mode::Liealg)), 0);
        assert_eq!(dim_orbit(&d(&[(2, &[2])])), 2);
        assert_eq!(dim_orbit(&d(&[(2, &[2]), (1, &[1])])), 6);
        assert_eq!(dim_class(&d(&[(1, &[1]), (1, &[1])])), 4);
        assert_eq!(dim_class(&d(&[(2, &[2])])), 3);
        assert_eq!(dim_class(&ClassDatum::central(4, Mode::Group)), 1);
    }

    #[test]
    fn induction() {
        let borel = LeviShape::new(vec![p(&[1]); 3]).unwrap();
        assert_eq!(induce(&borel), p(&[3]));
        let ls = LeviShape::from_blocks(&[2, 1], vec![p(&[1, 1]), p(&[1])]).unwrap();
        assert_eq!(induce(&ls), p(&[2, 1]));
        let ls = LeviShape::from_blocks(&[2, 2], vec![p(&[2]), p(&[2])]).unwrap();
        assert_eq!(induce(&ls), p(&[4]));
        assert!(LeviShape::from_blocks(&[2], vec![p(&[1])]).is_err());
    }

    #[test]
    fn json_schema() {
        let j = d(&[(1, &[1]), (2, &[2])]);
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(s, r#"{"n":3,"mode":"liealg","slots":[[2,[2]],[1,[1]]]}"#);
        assert_eq!(serde_json::from_str::<ClassDatum>(&s).unwrap(), j);
        assert!(serde_json::from_str::<ClassDatum>(r#"{"n":4,"mode":"group","slots":[[2,[2]]]}"#).is_err());
        assert!(serde_json::from_str::<ClassDatum>(r#"{"n":2,"mode":"group","slots":[[2,[1]]]}"#).is_err());
    }

    #[test]
    fn patterns() {
        let f = Field::Prime(7);
        let jd = JordanData::new(f, vec![(f.one(), Partition::trivial(3))]).unwrap();
        assert_eq!(pattern_of(&jd, Mode::Group), ClassDatum::central(3, Mode::Group));
        let jd = JordanData::new(f, vec![(f.zero(), p(&[2])), (f.one(), p(&[1]))]).unwrap();
        assert_eq!(pattern_of(&jd, Mode::Liealg), d(&[(2, &[2]), (1, &[1])]));
        let jd = JordanData::new(f, (1..=3).map(|a| (f.from_i64(a), p(&[1]))).collect()).unwrap();
        assert_eq!(pattern_of(&jd, Mode::Liealg), d(&[(1, &[1]), (1, &[1]), (1, &[1])]));
    }
}
