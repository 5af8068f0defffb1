//! Integer partitions and the dominance order.
//!
//! Partitions label nilpotent orbits of `gl_n` and unipotent classes of
//! `GL_n` through the Jordan type.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The partition `(1^n)`.
    pub fn trivial(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The one-part partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition(Vec::new())
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `j`-th part, zero past the end.
    pub fn part(&self, j: usize) -> usize {
        self.0.get(j).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect();
        Partition(parts)
    }

    /// `Σ_j (λᵗ_j)²`, the dimension of the centralizer of a nilpotent of
    /// Jordan type `λ` in `gl_{|λ|}`.
    pub fn centralizer_dim(&self) -> usize {
        self.transpose().0.iter().map(|c| c * c).sum()
    }

    /// `self ⊴ other`: equal sizes and every partial sum of `self` is at most
    /// the matching partial sum of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for j in 0..len {
            a += self.part(j);
            b += other.part(j);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Dominance as a partial order; `None` when incomparable or sizes differ.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        match (self.dominated_by(other), other.dominated_by(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    /// Componentwise sum, padding the shorter partition with zeros.
    pub fn row_sum(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition((0..len).map(|j| self.part(j) + other.part(j)).collect())
    }

    /// Every partition of `n`, in reverse lexicographic order
    /// (`(n)` first, `(1^n)` last).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// The number of partitions of `n`.
    pub fn count(n: usize) -> usize {
        // p(k) via the recurrence on the largest allowed part.
        let mut table = vec![0usize; n + 1];
        table[0] = 1;
        for part in 1..=n {
            for total in part..=n {
                table[total] += table[total - part];
            }
        }
        table[n]
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
