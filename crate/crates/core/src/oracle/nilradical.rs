use rand::Rng;

use super::modp::{jordan_block, jordan_type, Mat};
use crate::jclass::LeviShape;
use crate::partition::Partition;

/// `u + n` with `u` the block-diagonal unipotent of Jordan types `ls.parts`
/// and `n` a random strictly block-upper matrix over `F_p`.
pub fn sample_parabolic<R: Rng + ?Sized>(ls: &LeviShape, p: u64, rng: &mut R) -> Mat {
    let n = ls.n();
    let mut block_of = Vec::with_capacity(n);
    let mut a = vec![vec![0u64; n]; n];
    let mut offset = 0;
    for (b, mu) in ls.parts.iter().enumerate() {
        for &k in mu.parts() {
            let j = jordan_block(1, k);
            for i in 0..k {
                for l in 0..k {
                    a[offset + i][offset + l] = j[i][l];
                }
                block_of.push(b);
            }
            offset += k;
        }
    }
    for i in 0..n {
        for j in 0..n {
            if block_of[i] < block_of[j] {
                a[i][j] = rng.gen_range(0..p);
            }
        }
    }
    a
}

/// The dominance-largest unipotent Jordan type among `samples` draws, if
/// one type dominates all others.
pub fn sampled_induced_type<R: Rng + ?Sized>(ls: &LeviShape, p: u64, samples: usize, rng: &mut R) -> Option<Partition> {
    let types: Vec<Partition> = (0..samples).map(|_| jordan_type(&sample_parabolic(ls, p, rng), 1, p)).collect();
    types.iter().find(|top| types.iter().all(|t| t.dominated_by(top))).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::sample::rng;

    #[test]
    fn borel_gives_regular() {
        let ls = LeviShape::new(vec![Partition::trivial(1); 3]).unwrap();
        let top = sampled_induced_type(&ls, 101, 10, &mut rng(1)).unwrap();
        assert_eq!(top.parts(), &[3]);
    }
}
