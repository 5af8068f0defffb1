use serde::{Deserialize, Serialize};

use super::datum::{induce_parts, ClassDatum, Mode, PointPattern, Slot};
use crate::error::{Error, Result};

fn check_compatible(j: &ClassDatum, p: &PointPattern) -> Result<()> {
    if j.n() != p.n() {
        return Err(Error::InvalidClass(format!("sizes differ: {} and {}", j.n(), p.n())));
    }
    if j.mode() != p.mode() {
        return Err(Error::InvalidClass(format!("modes differ: {} and {}", j.mode(), p.mode())));
    }
    Ok(())
}

/// Calls `visit` on every map `φ` from the slots of `j` onto the slots of
/// `p` with matching block sizes whose merged blocks pass the orbit test.
/// Permutations of equal source slots are visited once. Stops early when
/// `visit` returns `false`.
fn for_each_merge(j: &ClassDatum, p: &PointPattern, exact: bool, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let src = j.slots();
    let dst = p.slots();
    let mut cap: Vec<usize> = dst.iter().map(Slot::m).collect();
    let mut phi = vec![0usize; src.len()];

    fn passes(src: &[Slot], dst: &[Slot], phi: &[usize], exact: bool) -> bool {
        dst.iter().enumerate().all(|(a, target)| {
            let ind = induce_parts(src.iter().zip(phi).filter(|&(_, &t)| t == a).map(|(s, _)| s.mu()));
            if exact {
                &ind == target.mu()
            } else {
                target.mu().dominated_by(&ind)
            }
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        src: &[Slot],
        dst: &[Slot],
        cap: &mut [usize],
        phi: &mut [usize],
        exact: bool,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == src.len() {
            // Capacities are exhausted exactly, so φ is onto.
            if passes(src, dst, phi, exact) {
                return visit(phi);
            }
            return true;
        }
        let lo = if i > 0 && src[i] == src[i - 1] { phi[i - 1] } else { 0 };
        for a in lo..dst.len() {
            if cap[a] >= src[i].m() {
                cap[a] -= src[i].m();
                phi[i] = a;
                let go_on = rec(i + 1, src, dst, cap, phi, exact, visit);
                cap[a] += src[i].m();
                if !go_on {
                    return false;
                }
            }
        }
        true
    }

    rec(0, src, dst, &mut cap, &mut phi, exact, visit);
}

fn exists_merge(j: &ClassDatum, p: &PointPattern, exact: bool) -> Result<bool> {
    check_compatible(j, p)?;
    let mut found = false;
    for_each_merge(j, p, exact, &mut |_| {
        found = true;
        false
    });
    Ok(found)
}

/// Whether points with pattern `p` lie in the closure of the class `j`.
pub fn closure_contains(j: &ClassDatum, p: &PointPattern) -> Result<bool> {
    exists_merge(j, p, false)
}

/// Whether points with pattern `p` lie in the regular closure of `j`, the
/// part of the closure with orbits of maximal dimension.
pub fn regular_closure_contains(j: &ClassDatum, p: &PointPattern) -> Result<bool> {
    exists_merge(j, p, true)
}

/// One block of the Levi `M` of a point, with the class of `GL_m` obtained
/// by merging slots of `j` into it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockClass {
    pub target: Slot,
    pub class: ClassDatum,
}

/// The classes of `M = Π GL_{m'_a}` (one per block of `p`) that meet `j`
/// and contain the point in their closure; each family is one element of
/// the local index set.
pub fn local_data(j: &ClassDatum, p: &PointPattern) -> Result<Vec<Vec<BlockClass>>> {
    check_compatible(j, p)?;
    let mut families: Vec<Vec<BlockClass>> = Vec::new();
    for_each_merge(j, p, false, &mut |phi| {
        let family: Vec<BlockClass> = p
            .slots()
            .iter()
            .enumerate()
            .map(|(a, target)| BlockClass {
                target: target.clone(),
                class: ClassDatum::new(
                    j.mode(),
                    j.slots().iter().zip(phi).filter(|&(_, &t)| t == a).map(|(s, _)| s.clone()).collect(),
                )
                .expect("onto"),
            })
            .collect();
        if !families.contains(&family) {
            families.push(family);
        }
        true
    });
    if families.is_empty() {
        return Err(Error::NotInClosure);
    }
    Ok(families)
}

/// Normality of the closure of a Jordan class of `GL_n`: the derived Levi is
/// `d` copies of `A_ℓ` carrying the same unipotent class.
pub fn is_closure_normal_gl(j: &ClassDatum) -> Result<bool> {
    if j.mode() != Mode::Group {
        return Err(Error::InvalidClass("normality criterion is stated for the group".into()));
    }
    Ok(j.slots().windows(2).all(|w| w[0] == w[1]))
}

/// Whether every slot carries the zero orbit `(1^m)`, the only rigid orbit
/// in type A.
pub fn has_rigid_orbit_data(j: &ClassDatum) -> bool {
    j.slots().iter().all(|s| s.mu().len() == s.m())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(slots: &[(usize, &[usize])]) -> ClassDatum {
        ClassDatum::from_parts(Mode::Liealg, slots).unwrap()
    }

    fn g(slots: &[(usize, &[usize])]) -> ClassDatum {
        ClassDatum::from_parts(Mode::Group, slots).unwrap()
    }

    #[test]
    fn closure_examples() {
        let reg_ss = d(&[(1, &[1]), (1, &[1])]);
        assert!(closure_contains(&reg_ss, &reg_ss).unwrap());
        assert!(closure_contains(&reg_ss, &d(&[(2, &[1, 1])])).unwrap());
        assert!(!closure_contains(&d(&[(2, &[1, 1]), (1, &[1])]), &d(&[(3, &[3])])).unwrap());
        assert!(closure_contains(&d(&[(2, &[1, 1]), (1, &[1])]), &d(&[(3, &[2, 1])])).unwrap());
        assert!(closure_contains(&reg_ss, &g(&[(2, &[1, 1])])).is_err());
    }

    #[test]
    fn regular_closure_examples() {
        let reg_ss = d(&[(1, &[1]), (1, &[1])]);
        assert!(regular_closure_contains(&reg_ss, &reg_ss).unwrap());
        assert!(regular_closure_contains(&reg_ss, &d(&[(2, &[2])])).unwrap());
        assert!(!regular_closure_contains(&reg_ss, &d(&[(2, &[1, 1])])).unwrap());
    }

    #[test]
    fn local_data_examples() {
        let reg_ss = d(&[(1, &[1]), (1, &[1])]);
        assert_eq!(local_data(&reg_ss, &d(&[(2, &[1, 1])])).unwrap().len(), 1);
        assert_eq!(local_data(&reg_ss, &reg_ss).unwrap().len(), 1);
        let j = d(&[(1, &[1]), (1, &[1]), (2, &[1, 1])]);
        let p = d(&[(2, &[2]), (2, &[1, 1])]);
        let fams = local_data(&j, &p).unwrap();
        assert_eq!(fams.len(), 1);
        let regular_block = fams[0].iter().find(|b| b.target.mu().len() == 1).unwrap();
        assert_eq!(regular_block.class, d(&[(1, &[1]), (1, &[1])]));
        assert_eq!(local_data(&d(&[(2, &[1, 1])]), &reg_ss), Err(Error::NotInClosure));
    }

    #[test]
    fn local_data_distinguishes_blocks() {
        // Equal source slots are interchangeable.
        let j = d(&[(1, &[1]), (1, &[1]), (1, &[1]), (1, &[1])]);
        let p = d(&[(2, &[1, 1]), (2, &[1, 1])]);
        assert_eq!(local_data(&j, &p).unwrap().len(), 1);
        let j = d(&[(1, &[1]), (1, &[1]), (2, &[2])]);
        let p = d(&[(2, &[1, 1]), (2, &[2])]);
        // The (1,1) block is fed either by both size-one slots or by the (2) slot.
        let fams = local_data(&j, &p).unwrap();
        assert_eq!(fams.len(), 2);
    }

    #[test]
    fn normality() {
        assert!(is_closure_normal_gl(&g(&[(2, &[2]), (2, &[2])])).unwrap());
        assert!(!is_closure_normal_gl(&g(&[(2, &[2]), (2, &[1, 1])])).unwrap());
        assert!(is_closure_normal_gl(&g(&[(3, &[2, 1])])).unwrap());
        assert!(is_closure_normal_gl(&d(&[(3, &[2, 1])])).is_err());
    }
}
