use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::subsystem::{centralizer_subsystem, is_rationally_closed};
use super::{RootSystem, Subsystem, TorusElement};
use crate::error::{Error, Result};
use crate::exactnum::field::Field;

/// Largest rank accepted by the enumeration.
pub const PSEUDO_LEVI_RANK_CAP: usize = 8;

/// A subsystem `Φ_s` together with an element `s` realizing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoLevi {
    pub subsystem: Subsystem,
    #[serde(rename = "type")]
    pub type_label: String,
    pub rationally_closed: bool,
    pub witness: TorusElement,
}

/// Kac labelings of one component: for each proper subset `J` of the
/// extended diagram, the values `θ_i` of the simple roots on an element
/// whose centralizer is spanned by `J`. Subsets admitting no such element of
/// order prime to `p` are skipped.
fn component_labelings(rs: &RootSystem, c: usize, p: u64) -> Vec<Vec<BigRational>> {
    let range = rs.component_range(c);
    let r = range.len();
    // n[0] = 1 for the affine node, n[1..] = coefficients of the highest root.
    let mut n = vec![1i64];
    n.extend(range.clone().map(|i| rs.root(rs.highest_root(c))[i]));
    let mut out = Vec::new();
    for mask in 0u32..(1 << (r + 1)) - 1 {
        // Bit i set: node i stays (s_i = 0).
        let free: Vec<usize> = (0..=r).filter(|&i| mask >> i & 1 == 0).collect();
        let mut s = vec![0i64; r + 1];
        for &i in &free {
            s[i] = 1;
        }
        let m: i64 = free.iter().map(|&i| n[i]).sum();
        let m = if p != 0 && m % p as i64 == 0 {
            // Bumping s_j by one changes m by n_j.
            match free.iter().copied().find(|&j| n[j] % p as i64 != 0) {
                Some(j) => {
                    s[j] = 2;
                    m + n[j]
                }
                None => continue,
            }
        } else {
            m
        };
        out.push((1..=r).map(|i| BigRational::new(s[i].into(), m.into())).collect());
    }
    out
}

fn enumerate(rs: &Arc<RootSystem>, p: u64) -> Result<Vec<PseudoLevi>> {
    Field::new(p)?;
    if rs.rank() > PSEUDO_LEVI_RANK_CAP {
        return Err(Error::CapExceeded {
            what: "pseudo-Levi enumeration rank",
            cap: PSEUDO_LEVI_RANK_CAP,
            got: rs.rank(),
        });
    }
    let per_component: Vec<Vec<Vec<BigRational>>> =
        (0..rs.components().len()).map(|c| component_labelings(rs, c, p)).collect();
    let mut found: BTreeMap<Vec<usize>, PseudoLevi> = BTreeMap::new();
    let mut choice = vec![0usize; per_component.len()];
    loop {
        let coords: Vec<BigRational> =
            choice.iter().zip(&per_component).flat_map(|(&k, labelings)| labelings[k].iter().cloned()).collect();
        let witness = TorusElement::multiplicative(coords, p)?;
        let subsystem = centralizer_subsystem(rs, &witness)?;
        found.entry(subsystem.members().to_vec()).or_insert_with(|| PseudoLevi {
            type_label: subsystem.type_label(),
            rationally_closed: is_rationally_closed(&subsystem),
            subsystem,
            witness,
        });
        // Odometer over the per-component choices.
        let mut k = 0;
        loop {
            if k == choice.len() {
                let mut out: Vec<PseudoLevi> = found.into_values().collect();
                out.sort_by(|a, b| {
                    b.subsystem
                        .len()
                        .cmp(&a.subsystem.len())
                        .then_with(|| a.subsystem.members().cmp(b.subsystem.members()))
                });
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < per_component[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Every subsystem of the form `Φ_s` for a torus element `s`, up to equality
/// of root sets.
///
/// A connected centralizer is read off from Kac coordinates: each factor
/// contributes the subsystem spanned by a proper subset of its extended
/// Dynkin diagram.
pub fn pseudo_levis(rs: &Arc<RootSystem>) -> Result<Vec<PseudoLevi>> {
    enumerate(rs, 0)
}

/// As [`pseudo_levis`], restricted to elements of order prime to `p`.
pub fn pseudo_levis_in_char(rs: &Arc<RootSystem>, p: u64) -> Result<Vec<PseudoLevi>> {
    enumerate(rs, p)
}
