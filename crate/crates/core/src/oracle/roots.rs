/// Number of distinct roots over the algebraic closure of `F_p` of a
/// polynomial of degree at most 3, coefficients listed from the constant
/// term up. Linear factors are split off by exhaustive evaluation; what is
/// left has no roots, so it is irreducible and contributes its degree.
pub fn closure_root_count(coeffs: &[u64], p: u64) -> Option<usize> {
    if p < 2 {
        return None;
    }
    let mut f: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
    while f.last() == Some(&0) {
        f.pop();
    }
    if f.is_empty() || f.len() > 4 {
        return None;
    }
    let eval = |f: &[u64], a: u64| f.iter().rev().fold(0, |acc, &c| (acc * a + c) % p);
    let mut distinct = 0;
    for a in 0..p {
        if eval(&f, a) != 0 {
            continue;
        }
        distinct += 1;
        while f.len() > 1 && eval(&f, a) == 0 {
            // Synthetic division by t - a.
            let mut q = vec![0; f.len() - 1];
            let mut carry = 0;
            for k in (1..f.len()).rev() {
                carry = (f[k] + carry * a) % p;
                q[k - 1] = carry;
            }
            f = q;
        }
    }
    Some(distinct + f.len() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        // t² - 1 over F_7.
        assert_eq!(closure_root_count(&[6, 0, 1], 7), Some(2));
        // (t - 1)² over F_5.
        assert_eq!(closure_root_count(&[1, 3, 1], 5), Some(1));
        // t² + 1 over F_7 is irreducible.
        assert_eq!(closure_root_count(&[1, 0, 1], 7), Some(2));
        // t³ - 2 over F_7: no roots.
        assert_eq!(closure_root_count(&[5, 0, 0, 1], 7), Some(3));
        // (t - 1)(t² + 1) over F_3.
        assert_eq!(closure_root_count(&[2, 1, 2, 1], 3), Some(3));
        assert_eq!(closure_root_count(&[1, 0, 0, 0, 1], 7), None);
    }
}
