use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{RootSystem, TorusElement};
use crate::error::{Error, Result};
use crate::exactnum::field::{Field, FieldElem};
use crate::exactnum::linalg;

/// A negation-closed, additively closed set of roots of a parent system,
/// stored as sorted root indices.
#[derive(Debug, Clone)]
pub struct Subsystem {
    parent: Arc<RootSystem>,
    members: Vec<usize>,
}

impl PartialEq for Subsystem {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
            && (Arc::ptr_eq(&self.parent, &other.parent) || self.parent.label() == other.parent.label())
    }
}

impl Eq for Subsystem {}

impl Subsystem {
    /// Validates negation closure and additive closure inside the parent.
    pub fn new(parent: Arc<RootSystem>, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&i| i >= parent.num_roots()) {
            return Err(Error::InvalidSubsystem(format!("root index {bad} out of range")));
        }
        let ss = Subsystem { parent, members: set.into_iter().collect() };
        if !ss.is_symmetric() {
            return Err(Error::InvalidSubsystem("not closed under negation".into()));
        }
        if !ss.is_additively_closed() {
            return Err(Error::InvalidSubsystem("not additively closed".into()));
        }
        Ok(ss)
    }

    /// No closure checks; callers guarantee the invariants.
    pub(crate) fn from_sorted(parent: Arc<RootSystem>, members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subsystem { parent, members }
    }

    pub fn full(parent: Arc<RootSystem>) -> Self {
        let members = (0..parent.num_roots()).collect();
        Subsystem { parent, members }
    }

    pub fn empty(parent: Arc<RootSystem>) -> Self {
        Subsystem { parent, members: Vec::new() }
    }

    /// The smallest reflection-stable set of roots containing `generators`
    /// and their negatives; the root subsystem they generate.
    pub fn generated_by(parent: Arc<RootSystem>, generators: &[usize]) -> Self {
        let mut set: BTreeSet<usize> = generators.iter().flat_map(|&g| [g, parent.negate(g)]).collect();
        let mut frontier: Vec<usize> = set.iter().copied().collect();
        while let Some(beta) = frontier.pop() {
            for &alpha in generators {
                let image = parent.reflect(alpha, beta);
                if set.insert(image) {
                    frontier.push(image);
                }
            }
        }
        Subsystem { parent, members: set.into_iter().collect() }
    }

    pub fn parent(&self) -> &Arc<RootSystem> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &Subsystem) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn positive(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied().filter(|&i| self.parent.is_positive(i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.members.iter().all(|&i| self.contains(self.parent.negate(i)))
    }

    pub fn is_additively_closed(&self) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| self.parent.sum(a, b).is_none_or(|c| self.contains(c))))
    }

    /// Simple roots of the positive system `Ψ ∩ Φ⁺`.
    pub fn base(&self) -> Vec<usize> {
        let pos: Vec<usize> = self.positive().collect();
        let rs = &self.parent;
        pos.iter()
            .copied()
            .filter(|&a| {
                !pos.iter().any(|&b| {
                    let diff: Vec<i64> = rs.root(a).iter().zip(rs.root(b)).map(|(x, y)| x - y).collect();
                    rs.index_of(&diff).is_some_and(|d| rs.is_positive(d) && self.contains(d))
                })
            })
            .collect()
    }

    /// Type of the subsystem as a root system, e.g. `A1xA1~`, where `~`
    /// marks a simply-laced factor made of short roots; `∅` when empty.
    pub fn type_label(&self) -> String {
        let base = self.base();
        if base.is_empty() {
            return "∅".into();
        }
        let rs = &self.parent;
        let mut seen = vec![false; base.len()];
        let mut labels: Vec<(usize, bool, String)> = Vec::new();
        for start in 0..base.len() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let a = base[comp[k]];
                for (j, &b) in base.iter().enumerate() {
                    if !seen[j] && rs.form(rs.root(a), rs.root(b)) != 0 {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            let nodes: Vec<usize> = comp.iter().map(|&j| base[j]).collect();
            labels.push(component_label(rs, &nodes));
        }
        labels.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)).then(a.2.cmp(&b.2)));
        labels.into_iter().map(|l| l.2).collect::<Vec<_>>().join("x")
    }

    /// Rank of the ℤ-span of the members.
    pub fn rank(&self) -> usize {
        self.base().len()
    }
}

/// `(rank, all long, label)` of one connected Dynkin component.
fn component_label(rs: &RootSystem, nodes: &[usize]) -> (usize, bool, String) {
    let r = nodes.len();
    let lengths: Vec<i64> = nodes.iter().map(|&i| rs.length_sq(i)).collect();
    let max = *lengths.iter().max().expect("nonempty");
    let min = *lengths.iter().min().expect("nonempty");
    if max != min {
        let label = if max == 3 * min {
            "G2".to_string()
        } else if r == 2 {
            "C2".to_string()
        } else {
            let long = lengths.iter().filter(|&&l| l == max).count();
            if r == 4 && long == 2 {
                "F4".to_string()
            } else if long == r - 1 {
                format!("B{r}")
            } else {
                format!("C{r}")
            }
        };
        return (r, true, label);
    }
    let degree = |i: usize| nodes.iter().filter(|&&j| j != i && rs.form(rs.root(i), rs.root(j)) != 0).count();
    let branch = nodes.iter().copied().find(|&i| degree(i) >= 3);
    let kind = match branch {
        None => format!("A{r}"),
        Some(b) => {
            // Arm lengths from the branch node.
            let mut arms: Vec<usize> = nodes
                .iter()
                .copied()
                .filter(|&j| j != b && rs.form(rs.root(b), rs.root(j)) != 0)
                .map(|first| {
                    let (mut prev, mut cur, mut len) = (b, first, 1);
                    loop {
                        let next = nodes
                            .iter()
                            .copied()
                            .find(|&j| j != prev && j != cur && rs.form(rs.root(cur), rs.root(j)) != 0);
                        match next {
                            Some(nx) => {
                                prev = cur;
                                cur = nx;
                                len += 1;
                            }
                            None => return len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms[..] {
                [1, 1, _] => format!("D{r}"),
                _ => format!("E{r}"),
            }
        }
    };
    let short = max < rs.max_length_sq(rs.component_of_root(nodes[0]));
    (r, !short, if short { format!("{kind}~") } else { kind })
}

/// `Φ_s`: the roots on which the torus element vanishes.
pub fn centralizer_subsystem(rs: &Arc<RootSystem>, s: &TorusElement) -> Result<Subsystem> {
    if s.rank() != rs.rank() {
        return Err(Error::InvalidTorusElement(format!(
            "element has {} coordinates, root system has rank {}",
            s.rank(),
            rs.rank()
        )));
    }
    let members = (0..rs.num_roots()).filter(|&i| s.kills(rs.root(i))).collect();
    Ok(Subsystem::from_sorted(rs.clone(), members))
}

/// `span_ℚ(Ψ) ∩ Φ`.
pub fn rational_closure(psi: &Subsystem) -> Subsystem {
    let rs = psi.parent();
    let q = Field::Rational;
    let to_row = |v: &[i64]| -> Vec<FieldElem> { v.iter().map(|&c| q.from_i64(c)).collect() };
    let mut basis: Vec<Vec<FieldElem>> = psi.base().iter().map(|&i| to_row(rs.root(i))).collect();
    let pivots = linalg::rref(&mut basis);
    basis.truncate(pivots.len());
    let in_span = |v: &[i64]| -> bool {
        let mut w = to_row(v);
        for (row, &pc) in basis.iter().zip(&pivots) {
            if w[pc].is_zero() {
                continue;
            }
            let c = w[pc].clone();
            for (x, y) in w.iter_mut().zip(row) {
                *x = &*x - &(&c * y);
            }
        }
        w.iter().all(FieldElem::is_zero)
    };
    let members = (0..rs.num_roots()).filter(|&i| in_span(rs.root(i))).collect();
    Subsystem::from_sorted(rs.clone(), members)
}

pub fn is_rationally_closed(psi: &Subsystem) -> bool {
    rational_closure(psi).len() == psi.len()
}

impl fmt::Display for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.type_label(), self.parent.label())
    }
}

#[derive(Serialize, Deserialize)]
struct SubsystemRepr {
    parent: String,
    members: Vec<usize>,
}

impl Serialize for Subsystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubsystemRepr { parent: self.parent.label(), members: self.members.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subsystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SubsystemRepr::deserialize(d)?;
        let parent = RootSystem::from_label(&repr.parent).map_err(D::Error::custom)?;
        Subsystem::new(Arc::new(parent), repr.members).map_err(D::Error::custom)
    }
}
