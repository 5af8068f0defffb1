//! Univariate polynomials over a [`Field`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, FieldElem};
use super::linalg;
use crate::error::{Error, Result};

/// Above this modulus roots are found by gcd splitting instead of
/// exhaustive evaluation.
pub const EXHAUSTIVE_ROOT_LIMIT: u32 = 100_000;

/// Coefficients from the constant term up; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<FieldElem>) -> Poly {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElem) -> Poly {
        Poly::new(c.field(), vec![c])
    }

    /// `t - a`.
    pub fn linear_root(a: &FieldElem) -> Poly {
        let f = a.field();
        Poly::new(f, vec![-a, f.one()])
    }

    /// `t^k`.
    pub fn monomial(field: Field, k: usize) -> Poly {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = field.one();
        Poly { field, coeffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FieldElem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.field, (0..len).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.field, (0..len).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Scales to leading coefficient one; the zero polynomial is unchanged.
    pub fn monic(&self) -> Poly {
        match self.leading().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Euclidean division. Panics when `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.leading().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return (Poly::zero(self.field), self.clone());
        };
        let mut quot = vec![self.field.zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dc);
            }
            quot[k] = c;
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &self.field.from_i64(k as i64)).collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.div_rem(m).1;
        let mut acc = Poly::constant(self.field.one()).div_rem(m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).div_rem(m).1;
            }
            base = base.mul(&base).div_rem(m).1;
            e >>= 1;
        }
        acc
    }

    /// Number of distinct roots in an algebraic closure of the field.
    ///
    /// Over `F_p` a root of multiplicity divisible by `p` is invisible to
    /// `f / gcd(f, f')`; such roots are collected from the `p`-th power part
    /// separately.
    pub fn distinct_root_count(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::DimensionMismatch("distinct roots of the zero polynomial".into()));
        }
        Ok(radical_degree(self))
    }

    /// Roots lying in the coefficient field, with multiplicities, in
    /// increasing order.
    pub fn roots_in_field(&self) -> Vec<(FieldElem, usize)> {
        if self.is_zero() {
            return Vec::new();
        }
        let candidates = match self.field {
            Field::Prime(p) if p <= EXHAUSTIVE_ROOT_LIMIT => {
                (0..p).map(|v| FieldElem::Residue { value: v, p }).filter(|a| self.eval(a).is_zero()).collect()
            }
            Field::Prime(p) => split_linear_factors(self, p),
            Field::Rational => rational_roots(self),
        };
        let mut out: Vec<(FieldElem, usize)> = candidates
            .into_iter()
            .map(|a| {
                let lin = Poly::linear_root(&a);
                let mut rest = self.clone();
                let mut mult = 0;
                loop {
                    let (q, r) = rest.div_rem(&lin);
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    mult += 1;
                }
                (a, mult)
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out.dedup_by(|a, b| a.0 == b.0);
        out
    }
}

fn radical_degree(f: &Poly) -> usize {
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let df = f.derivative();
    if df.is_zero() {
        // f(t) = h(t^p) = h(t)^p after Frobenius on coefficients (F_p is perfect).
        let p = f.field.characteristic() as usize;
        let h = Poly::new(f.field, f.coeffs.iter().step_by(p).cloned().collect());
        return radical_degree(&h);
    }
    let g = f.gcd(&df);
    let w = f.div_rem(&g).0;
    // Strip from g every root already counted in w; what remains has all
    // multiplicities divisible by p.
    let mut rest = g;
    loop {
        let common = rest.gcd(&w);
        if common.degree() == Some(0) {
            break;
        }
        rest = rest.div_rem(&common).0;
    }
    w.degree().unwrap_or(0) + radical_degree(&rest)
}

/// Roots of `f` in `F_p` via `gcd(f, t^p - t)` and random splitting.
fn split_linear_factors(f: &Poly, p: u32) -> Vec<FieldElem> {
    let field = f.field;
    let t = Poly::monomial(field, 1);
    let tp = t.pow_mod(p as u64, f);
    let mut stack = vec![f.gcd(&tp.sub(&t))];
    let mut roots = Vec::new();
    let mut shift = 0i64;
    while let Some(g) = stack.pop() {
        match g.degree() {
            None | Some(0) => continue,
            Some(1) => {
                roots.push(-&g.coeff(0));
                continue;
            }
            _ => {}
        }
        // Split with gcd(g, (t + δ)^((p-1)/2) - 1) for δ = 0, 1, 2, ...
        loop {
            let lin = Poly::new(field, vec![field.from_i64(shift), field.one()]);
            shift += 1;
            let h = lin.pow_mod((p as u64 - 1) / 2, &g).sub(&Poly::constant(field.one()));
            let d = g.gcd(&h);
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && Some(dd) < g.degree() {
                let other = g.div_rem(&d).0;
                stack.push(d);
                stack.push(other);
                break;
            }
        }
    }
    roots
}

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    // Trial division; a cofactor left above the bound is treated as prime.
    let mut n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let bound = BigInt::from(1_000_000u64);
    while &d * &d <= n && d <= bound {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (q, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pw);
                pw *= &q;
            }
        }
        divs = next;
    }
    divs
}

/// Rational roots by the rational root theorem.
fn rational_roots(f: &Poly) -> Vec<FieldElem> {
    let mut lcm = BigInt::one();
    for c in &f.coeffs {
        lcm = lcm.lcm(c.as_rational().expect("rational coefficients").denom());
    }
    let ints: Vec<BigInt> = f
        .coeffs
        .iter()
        .map(|c| (c.as_rational().unwrap() * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(Field::Rational.zero());
    }
    let trimmed = &ints[low..];
    if trimmed.len() <= 1 {
        return roots;
    }
    let nums = small_divisors(&trimmed[0]);
    let dens = small_divisors(trimmed.last().unwrap());
    for a in &nums {
        for b in &dens {
            for sign in [1i64, -1] {
                let r = BigRational::new(a * BigInt::from(sign), b.clone());
                let x = FieldElem::Rational(r);
                if f.eval(&x).is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots
}

/// `Res(f, g)` as the determinant of the Sylvester matrix whose first
/// `deg g` rows carry the coefficients of `f` (highest degree first).
///
/// Conventions for degenerate degrees: `Res(c, g) = c^deg g` for a nonzero
/// constant `c` (and symmetrically), `Res(f, 0) = Res(0, g) = 0` unless the
/// other argument is a nonzero constant, in which case it is `1`. Both
/// arguments zero is rejected.
pub fn resultant(f: &Poly, g: &Poly) -> Result<FieldElem> {
    if f.field != g.field {
        return Err(Error::FieldMismatch(format!("{} vs {}", f.field, g.field)));
    }
    let field = f.field;
    match (f.degree(), g.degree()) {
        (None, None) => Err(Error::DimensionMismatch("resultant of two zero polynomials".into())),
        (None, Some(0)) | (Some(0), None) => Ok(field.one()),
        (None, _) | (_, None) => Ok(field.zero()),
        (Some(0), Some(n)) => Ok(f.coeff(0).pow(n as u64)),
        (Some(m), Some(0)) => Ok(g.coeff(0).pow(m as u64)),
        (Some(m), Some(n)) => {
            let size = m + n;
            let mut rows = vec![vec![field.zero(); size]; size];
            for i in 0..n {
                for k in 0..=m {
                    rows[i][i + k] = f.coeff(m - k);
                }
            }
            for i in 0..m {
                for k in 0..=n {
                    rows[n + i][i + k] = g.coeff(n - k);
                }
            }
            Ok(linalg::determinant(&rows, field))
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            terms.push(match k {
                0 => cs,
                1 if c.is_one() => "t".to_string(),
                1 => format!("{cs}*t"),
                _ if c.is_one() => format!("t^{k}"),
                _ => format!("{cs}*t^{k}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// Small helper for callers that need an integer count of a root list.
pub fn total_multiplicity(roots: &[(FieldElem, usize)]) -> usize {
    roots.iter().map(|(_, m)| m).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resultant_examples() {
        let q = Field::Rational;
        let f = Poly::from_i64(q, &[-1, 0, 1]);
        let g = Poly::from_i64(q, &[0, 2]);
        assert_eq!(resultant(&f, &g).unwrap(), q.from_i64(-4));
        // Repeated root: the discriminant vanishes.
        let sq = Poly::from_i64(q, &[1, -2, 1]);
        assert!(resultant(&sq, &sq.derivative()).unwrap().is_zero());
        // Linear case: Res(t - a, t - b) = a - b.
        let (a, b) = (q.from_i64(5), q.from_i64(-3));
        let r = resultant(&Poly::linear_root(&a), &Poly::linear_root(&b)).unwrap();
        assert_eq!(r, &a - &b);
        assert!(resultant(&Poly::zero(q), &Poly::zero(q)).is_err());
        assert!(resultant(&Poly::zero(q), &f).unwrap().is_zero());
        assert_eq!(resultant(&Poly::from_i64(q, &[3]), &f).unwrap(), q.from_i64(9));
    }

    #[test]
    fn division_and_gcd() {
        let f = Field::Prime(7);
        let a = Poly::from_i64(f, &[-1, 0, 1]); // (t-1)(t+1)
        let b = Poly::from_i64(f, &[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_i64(f, &[1, 1]));
        assert_eq!(a.gcd(&Poly::from_i64(f, &[-2, 2])), b);
    }

    #[test]
    fn distinct_roots() {
        let t2m1 = |p| Poly::from_i64(Field::new(p).unwrap(), &[-1, 0, 1]);
        assert_eq!(t2m1(0).distinct_root_count().unwrap(), 2);
        assert_eq!(t2m1(7).distinct_root_count().unwrap(), 2);
        assert_eq!(t2m1(2).distinct_root_count().unwrap(), 1);
        // t^3 - 1 is squarefree mod 7.
        let f = Poly::from_i64(Field::Prime(7), &[-1, 0, 0, 1]);
        assert_eq!(f.distinct_root_count().unwrap(), 3);
        // (t-1)^2 t over F_2: the double root is invisible to f/gcd(f, f').
        let g = Poly::from_i64(Field::Prime(2), &[0, 1, 0, 1]);
        assert_eq!(g.distinct_root_count().unwrap(), 2);
        // (t-1)^3 (t-2) over F_3.
        let f3 = Field::Prime(3);
        let h = Poly::linear_root(&f3.from_i64(1))
            .mul(&Poly::linear_root(&f3.from_i64(1)))
            .mul(&Poly::linear_root(&f3.from_i64(1)))
            .mul(&Poly::linear_root(&f3.from_i64(2)));
        assert_eq!(h.distinct_root_count().unwrap(), 2);
        assert!(Poly::zero(f3).distinct_root_count().is_err());
    }

    #[test]
    fn roots_in_small_and_large_fields() {
        let q = Field::Rational;
        let f = Poly::from_i64(q, &[0, 6, -5, 1]); // t (t-2)(t-3)
        let roots = f.roots_in_field();
        let vals: Vec<String> = roots.iter().map(|(r, _)| r.to_string()).collect();
        assert_eq!(vals, vec!["0", "2", "3"]);
        let g = Poly::from_i64(q, &[-1, 0, 4]); // (2t-1)(2t+1)
        assert_eq!(g.roots_in_field().len(), 2);

        let big = Field::Prime(1_000_003);
        let h = Poly::linear_root(&big.from_i64(17))
            .mul(&Poly::linear_root(&big.from_i64(17)))
            .mul(&Poly::linear_root(&big.from_i64(999_999)))
            .mul(&Poly::from_i64(big, &[2, 0, 1])); // t^2 + 2, irreducible when -2 is a non-square
        let roots = h.roots_in_field();
        assert!(roots.contains(&(big.from_i64(17), 2)));
        assert!(roots.contains(&(big.from_i64(999_999), 1)));
    }
}
