//! Prime fields and the rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The coefficient field: `ℚ` or `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// `0` selects `ℚ`; otherwise `p` must be a prime below `2^31`.
    pub fn new(p: u64) -> Result<Field> {
        if p == 0 {
            Ok(Field::Rational)
        } else if p < MAX_PRIME && is_prime(p) {
            Ok(Field::Prime(p as u32))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p as u64,
        }
    }

    pub fn zero(self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> FieldElem {
        match self {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(v.into())),
            Field::Prime(p) => FieldElem::Residue { value: v.rem_euclid(p as i64) as u32, p },
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> FieldElem {
        match self {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p)).to_u32().expect("residue fits");
                FieldElem::Residue { value: r, p }
            }
        }
    }

    /// `num/den`, failing when `den` vanishes in the field.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<FieldElem> {
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        d.inv().map(|d| &n * &d).ok_or_else(|| Error::Parse(format!("denominator {den} vanishes in {self}")))
    }

    /// Reduces a rational into the field.
    pub fn from_rational(self, q: &BigRational) -> Result<FieldElem> {
        match self {
            Field::Rational => Ok(FieldElem::Rational(q.clone())),
            Field::Prime(_) => {
                let n = self.from_bigint(q.numer());
                let d = self.from_bigint(q.denom());
                d.inv()
                    .map(|d| &n * &d)
                    .ok_or_else(|| Error::Parse(format!("denominator {} vanishes in {self}", q.denom())))
            }
        }
    }

    /// Parses `"a"` or `"a/b"`.
    pub fn parse(self, s: &str) -> Result<FieldElem> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad field element {s:?}"));
        match s.split_once('/') {
            None => {
                let v: BigInt = s.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&v))
            }
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                if b.is_zero() {
                    return Err(bad());
                }
                self.from_rational(&BigRational::new(a, b))
            }
        }
    }

    /// All elements of a prime field in increasing order; `None` for `ℚ`.
    pub fn elements(self) -> Option<impl Iterator<Item = FieldElem>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(move |value| FieldElem::Residue { value, p })),
        }
    }
}

impl TryFrom<u64> for Field {
    type Error = Error;
    fn try_from(p: u64) -> Result<Field> {
        Field::new(p)
    }
}

impl From<Field> for u64 {
    fn from(f: Field) -> u64 {
        f.characteristic()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An element of `ℚ` (reduced fraction) or of `F_p` (residue in `[0, p)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rational(BigRational),
    Residue { value: u32, p: u32 },
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // a^(p-2) by square and multiply
    let (mut base, mut exp, mut acc) = (a as u64, p as u64 - 2, 1u64);
    let m = p as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u32
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rational(_) => Field::Rational,
            FieldElem::Residue { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_zero(),
            FieldElem::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_one(),
            FieldElem::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElem::Rational(q) => FieldElem::Rational(q.recip()),
            FieldElem::Residue { value, p } => FieldElem::Residue { value: inv_mod(*value, *p), p: *p },
        })
    }

    pub fn pow(&self, mut exp: u64) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Residue value for prime-field elements.
    pub fn residue(&self) -> Option<u32> {
        match self {
            FieldElem::Residue { value, .. } => Some(*value),
            FieldElem::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElem::Rational(q) => Some(q),
            FieldElem::Residue { .. } => None,
        }
    }

    fn check(&self, other: &FieldElem) {
        assert_eq!(self.field(), other.field(), "arithmetic between elements of different fields");
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElem::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used for canonical listings: numeric for `ℚ`, by residue
/// for `F_p`.
impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => a.cmp(b),
            (FieldElem::Residue { value: a, p: pa }, FieldElem::Residue { value: b, p: pb }) => (pa, a).cmp(&(pb, b)),
            (FieldElem::Rational(_), _) => Ordering::Less,
            (_, FieldElem::Rational(_)) => Ordering::Greater,
        }
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.check(rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a + b),
            (FieldElem::Residue { value: a, p }, FieldElem::Residue { value: b, .. }) => {
                FieldElem::Residue { value: ((*a as u64 + *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => unreachable!(),
        }
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.check(rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a * b),
            (FieldElem::Residue { value: a, p }, FieldElem::Residue { value: b, .. }) => {
                FieldElem::Residue { value: ((*a as u64 * *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => unreachable!(),
        }
    }
}

impl Div for &FieldElem {
    type Output = FieldElem;
    /// Panics on division by zero.
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(-a),
            FieldElem::Residue { value, p } => {
                FieldElem::Residue { value: if *value == 0 { 0 } else { p - value }, p: *p }
            }
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}
