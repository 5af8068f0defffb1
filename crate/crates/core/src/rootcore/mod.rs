//! Root systems in the simple-root basis, prime classification, torus
//! elements and their centralizer subsystems.

mod prime;
mod pseudo_levi;
mod subsystem;
mod torus;
mod weyl;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use prime::{classify_prime, PrimeVerdict};
pub use pseudo_levi::{pseudo_levis, pseudo_levis_in_char, PseudoLevi};
pub use subsystem::{centralizer_subsystem, is_rationally_closed, rational_closure, Subsystem};
pub use torus::{TorusElement, TorusMode};
pub use weyl::{WeylGroup, WEYL_RANK_CAP};

/// Cartan-Killing family of an irreducible root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl RootType {
    pub fn from_char(c: char) -> Option<RootType> {
        Some(match c.to_ascii_uppercase() {
            'A' => RootType::A,
            'B' => RootType::B,
            'C' => RootType::C,
            'D' => RootType::D,
            'E' => RootType::E,
            'F' => RootType::F,
            'G' => RootType::G,
            _ => return None,
        })
    }

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            RootType::A => rank >= 1,
            RootType::B | RootType::C => rank >= 2,
            RootType::D => rank >= 4,
            RootType::E => (6..=8).contains(&rank),
            RootType::F => rank == 4,
            RootType::G => rank == 2,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, RootType::A | RootType::B | RootType::C | RootType::D)
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// An irreducible factor `(type, rank)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Component {
    #[serde(rename = "type")]
    pub kind: RootType,
    pub rank: usize,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

/// Symmetric bilinear form on the simple roots, scaled to integers, in
/// Bourbaki numbering.
fn gram(c: Component) -> Vec<Vec<i64>> {
    let l = c.rank;
    let mut g = vec![vec![0i64; l]; l];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 2;
    }
    match c.kind {
        RootType::A => (1..l).for_each(|i| link(&mut g, i - 1, i, -1)),
        RootType::B => {
            (1..l).for_each(|i| link(&mut g, i - 1, i, -1));
            g[l - 1][l - 1] = 1;
        }
        RootType::C => {
            (1..l - 1).for_each(|i| link(&mut g, i - 1, i, -1));
            link(&mut g, l - 2, l - 1, -2);
            g[l - 1][l - 1] = 4;
        }
        RootType::D => {
            (1..l - 1).for_each(|i| link(&mut g, i - 1, i, -1));
            link(&mut g, l - 3, l - 1, -1);
        }
        RootType::E => {
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            (3..l).for_each(|i| link(&mut g, i - 1, i, -1));
        }
        RootType::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        RootType::G => {
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
    }
    g
}

/// A (possibly reducible) crystallographic root system.
///
/// Roots are integer vectors in the basis of simple roots. The first `N`
/// roots are the positive ones, sorted by height and then in decreasing
/// lexicographic order, so root `i < rank` is the simple root `α_i`; root
/// `i + N` is the negative of root `i`.
#[derive(Debug)]
pub struct RootSystem {
    components: Vec<Component>,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    /// Component of each simple root.
    component_of: Vec<usize>,
    weyl: OnceLock<Arc<WeylGroup>>,
}

impl RootSystem {
    /// The irreducible system of the given type.
    pub fn build(kind: RootType, rank: usize) -> Result<RootSystem> {
        RootSystem::product(&[Component { kind, rank }])
    }

    /// Direct sum of irreducible systems, with block diagonal Cartan matrix.
    pub fn product(components: &[Component]) -> Result<RootSystem> {
        if components.is_empty() {
            return Err(Error::InvalidRootSystem { label: String::new(), rank: 0 });
        }
        for c in components {
            if !c.kind.is_valid_rank(c.rank) {
                return Err(Error::InvalidRootSystem { label: c.kind.to_string(), rank: c.rank });
            }
        }
        let rank: usize = components.iter().map(|c| c.rank).sum();
        let mut g = vec![vec![0i64; rank]; rank];
        let mut component_of = Vec::with_capacity(rank);
        let mut off = 0;
        for (ci, c) in components.iter().enumerate() {
            let block = gram(*c);
            for i in 0..c.rank {
                for j in 0..c.rank {
                    g[off + i][off + j] = block[i][j];
                }
                component_of.push(ci);
            }
            off += c.rank;
        }
        let cartan = (0..rank).map(|i| (0..rank).map(|j| 2 * g[i][j] / g[i][i]).collect()).collect();
        let positive = positive_roots(&g);
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|c| -c).collect()));
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        Ok(RootSystem {
            components: components.to_vec(),
            gram: g,
            cartan,
            roots,
            index,
            component_of,
            weyl: OnceLock::new(),
        })
    }

    /// Parses labels such as `E8`, `C2` or `A1xG2`.
    pub fn from_label(label: &str) -> Result<RootSystem> {
        let components = label
            .split(['x', '×', '+'])
            .map(|part| {
                let part = part.trim();
                let bad = || Error::Parse(format!("bad root system label {label:?}"));
                let mut chars = part.chars();
                let kind = chars.next().and_then(RootType::from_char).ok_or_else(bad)?;
                let rank = chars.as_str().parse().map_err(|_| bad())?;
                Ok(Component { kind, rank })
            })
            .collect::<Result<Vec<_>>>()?;
        RootSystem::product(&components)
    }

    pub fn label(&self) -> String {
        self.components.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn simple_indices(&self) -> Vec<usize> {
        (0..self.rank()).collect()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    pub fn negate(&self, i: usize) -> usize {
        let n = self.num_positive();
        if i < n {
            i + n
        } else {
            i - n
        }
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    /// `B(u, v)` for vectors in the simple-root basis.
    pub fn form(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                acc += a * b * self.gram[i][j];
            }
        }
        acc
    }

    pub fn length_sq(&self, i: usize) -> i64 {
        self.form(&self.roots[i], &self.roots[i])
    }

    /// `⟨β, α^∨⟩ = 2B(β, α)/B(α, α)`.
    pub fn pairing(&self, beta: usize, alpha: usize) -> i64 {
        let a = &self.roots[alpha];
        2 * self.form(&self.roots[beta], a) / self.form(a, a)
    }

    /// Index of `s_α(β)`.
    pub fn reflect(&self, alpha: usize, beta: usize) -> usize {
        let k = self.pairing(beta, alpha);
        let v: Vec<i64> = self.roots[beta].iter().zip(&self.roots[alpha]).map(|(b, a)| b - k * a).collect();
        self.index_of(&v).expect("reflections permute roots")
    }

    /// Index of `α + β` when it is a root.
    pub fn sum(&self, alpha: usize, beta: usize) -> Option<usize> {
        let v: Vec<i64> = self.roots[alpha].iter().zip(&self.roots[beta]).map(|(a, b)| a + b).collect();
        self.index_of(&v)
    }

    /// Irreducible component containing root `i`.
    pub fn component_of_root(&self, i: usize) -> usize {
        let k = self.roots[i].iter().position(|&c| c != 0).expect("roots are nonzero");
        self.component_of[k]
    }

    /// Range of simple-root coordinates belonging to component `c`.
    pub fn component_range(&self, c: usize) -> std::ops::Range<usize> {
        let start: usize = self.components[..c].iter().map(|x| x.rank).sum();
        start..start + self.components[c].rank
    }

    /// Highest root of component `c`, as a root index.
    pub fn highest_root(&self, c: usize) -> usize {
        (0..self.num_positive())
            .filter(|&i| self.component_of_root(i) == c)
            .max_by_key(|&i| self.height(i))
            .expect("components are nonempty")
    }

    /// Largest squared root length within component `c`.
    pub fn max_length_sq(&self, c: usize) -> i64 {
        self.component_range(c).map(|i| self.gram[i][i]).max().expect("components are nonempty")
    }

    pub fn is_long(&self, i: usize) -> bool {
        self.length_sq(i) == self.max_length_sq(self.component_of_root(i))
    }

    /// The Weyl group as permutations of root indices; rank at most
    /// [`WEYL_RANK_CAP`].
    pub fn weyl_group(&self) -> Result<Arc<WeylGroup>> {
        if self.rank() > WEYL_RANK_CAP {
            return Err(Error::CapExceeded {
                what: "Weyl group enumeration rank",
                cap: WEYL_RANK_CAP,
                got: self.rank(),
            });
        }
        Ok(self.weyl.get_or_init(|| Arc::new(WeylGroup::generate(self))).clone())
    }
}

impl FromStr for RootSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RootSystem::from_label(s)
    }
}

/// Positive roots by the string algorithm, sorted by height and then in
/// decreasing lexicographic order.
fn positive_roots(g: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = g.len();
    let form = |u: &[i64], j: usize| -> i64 { (0..l).map(|i| u[i] * g[i][j]).sum() };
    let mut levels: Vec<Vec<Vec<i64>>> = vec![(0..l).map(|i| (0..l).map(|j| i64::from(i == j)).collect()).collect()];
    let mut known: std::collections::HashSet<Vec<i64>> = levels[0].iter().cloned().collect();
    loop {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in levels.last().expect("nonempty") {
            for i in 0..l {
                // r = length of the α_i-string below β; q = r - ⟨β, α_i^∨⟩.
                let mut r = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                let q = r - 2 * form(beta, i) / g[i][i];
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        known.extend(next.iter().cloned());
        levels.push(next);
    }
    let mut out: Vec<Vec<i64>> = levels.into_iter().flatten().collect();
    out.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    out
}

#[derive(Serialize)]
struct RootSystemRepr<'a> {
    type_label: String,
    rank: usize,
    components: &'a [Component],
    roots: &'a [Vec<i64>],
    cartan: &'a [Vec<i64>],
    simple_indices: Vec<usize>,
}

impl Serialize for RootSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RootSystemRepr {
            type_label: self.label(),
            rank: self.rank(),
            components: &self.components,
            roots: &self.roots,
            cartan: &self.cartan,
            simple_indices: self.simple_indices(),
        }
        .serialize(s)
    }
}

#[derive(Deserialize)]
struct RootSystemLabel {
    type_label: String,
}

impl<'de> Deserialize<'de> for RootSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RootSystemLabel::deserialize(d)?;
        RootSystem::from_label(&repr.type_label).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(kind: RootType, l: usize) -> usize {
        RootSystem::build(kind, l).unwrap().num_roots()
    }

    #[test]
    fn classical_counts() {
        for l in 1..=7 {
            assert_eq!(count(RootType::A, l), l * (l + 1));
        }
        for l in 2..=5 {
            assert_eq!(count(RootType::B, l), 2 * l * l);
            assert_eq!(count(RootType::C, l), 2 * l * l);
        }
        for l in 4..=6 {
            assert_eq!(count(RootType::D, l), 2 * l * (l - 1));
        }
    }

    #[test]
    fn exceptional_counts() {
        assert_eq!(count(RootType::E, 6), 72);
        assert_eq!(count(RootType::E, 7), 126);
        assert_eq!(count(RootType::E, 8), 240);
        assert_eq!(count(RootType::F, 4), 48);
        assert_eq!(count(RootType::G, 2), 12);
    }

    #[test]
    fn highest_roots() {
        let e8 = RootSystem::build(RootType::E, 8).unwrap();
        assert_eq!(e8.root(e8.highest_root(0)), &[2, 3, 4, 6, 5, 4, 3, 2]);
        let f4 = RootSystem::build(RootType::F, 4).unwrap();
        assert_eq!(f4.root(f4.highest_root(0)), &[2, 3, 4, 2]);
        let g2 = RootSystem::build(RootType::G, 2).unwrap();
        assert_eq!(g2.root(g2.highest_root(0)), &[3, 2]);
        let c3 = RootSystem::build(RootType::C, 3).unwrap();
        assert_eq!(c3.root(c3.highest_root(0)), &[2, 2, 1]);
        let b3 = RootSystem::build(RootType::B, 3).unwrap();
        assert_eq!(b3.root(b3.highest_root(0)), &[1, 2, 2]);
    }

    #[test]
    fn structure() {
        let c2 = RootSystem::build(RootType::C, 2).unwrap();
        assert_eq!(c2.cartan(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(c2.simple_indices(), vec![0, 1]);
        assert_eq!(c2.root(0), &[1, 0]);
        assert_eq!(c2.root(1), &[0, 1]);
        let lengths: std::collections::BTreeSet<i64> = (0..c2.num_roots()).map(|i| c2.length_sq(i)).collect();
        assert_eq!(lengths.len(), 2);
        for rs in [c2, RootSystem::from_label("A1xG2").unwrap()] {
            for i in 0..rs.num_roots() {
                let r = rs.root(i);
                assert!(r.iter().all(|&c| c >= 0) || r.iter().all(|&c| c <= 0));
                assert_eq!(rs.index_of(&r.iter().map(|c| -c).collect::<Vec<_>>()), Some(rs.negate(i)));
                assert_eq!(rs.reflect(i, i), rs.negate(i));
            }
            for row in rs.cartan() {
                assert!(row.iter().all(|c| [2, 0, -1, -2, -3].contains(c)));
            }
        }
    }

    #[test]
    fn rejects_invalid() {
        assert!(RootSystem::build(RootType::D, 3).is_err());
        assert!(RootSystem::build(RootType::E, 9).is_err());
        assert!(RootSystem::build(RootType::B, 1).is_err());
        assert!(RootSystem::from_label("Q2").is_err());
    }

    #[test]
    fn label_roundtrip() {
        let rs = RootSystem::from_label("A1xG2").unwrap();
        assert_eq!(rs.label(), "A1xG2");
        assert_eq!(rs.num_roots(), 14);
        let json = serde_json::to_string(&rs).unwrap();
        let back: RootSystem = serde_json::from_str(&json).unwrap();
        assert_eq!(back.roots(), rs.roots());
    }
}
