use serde::{Deserialize, Serialize};

use super::{Component, RootSystem, RootType};
use crate::error::{Error, Result};
use crate::exactnum::field::is_prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeVerdict {
    pub p: u64,
    pub good: bool,
    pub very_good: bool,
    pub torsion: bool,
    pub bad: bool,
    /// Present when the caller supplied it; `torsion` then also accounts
    /// for `p` dividing this order.
    pub fundamental_group_order: Option<u64>,
}

/// `B2` and `C2` are the same root system; the `C` name is canonical so that
/// verdicts do not depend on the label.
fn normalize(c: Component) -> Component {
    match c {
        Component { kind: RootType::B, rank: 2 } => Component { kind: RootType::C, rank: 2 },
        c => c,
    }
}

fn is_bad(c: Component, p: u64) -> bool {
    match p {
        2 => c.kind != RootType::A,
        3 => !c.kind.is_classical(),
        5 => c.kind == RootType::E && c.rank == 8,
        _ => false,
    }
}

fn is_torsion(c: Component, p: u64) -> bool {
    match p {
        2 => !matches!(c.kind, RootType::A | RootType::C),
        3 => matches!(c.kind, RootType::E | RootType::F),
        5 => c.kind == RootType::E && c.rank == 8,
        _ => false,
    }
}

/// Good, very good, torsion and bad flags of `p` for `rs`, combined over
/// the irreducible components.
pub fn classify_prime(rs: &RootSystem, p: u64, fundamental_group_order: Option<u64>) -> Result<PrimeVerdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if fundamental_group_order == Some(0) {
        return Err(Error::Parse("fundamental group order must be positive".into()));
    }
    let comps: Vec<Component> = rs.components().iter().copied().map(normalize).collect();
    let good = comps.iter().all(|&c| !is_bad(c, p));
    let very_good = good && comps.iter().all(|c| c.kind != RootType::A || (c.rank as u64 + 1) % p != 0);
    let torsion = comps.iter().any(|&c| is_torsion(c, p)) || fundamental_group_order.is_some_and(|f| f % p == 0);
    Ok(PrimeVerdict { p, good, very_good, torsion, bad: !good, fundamental_group_order })
}
