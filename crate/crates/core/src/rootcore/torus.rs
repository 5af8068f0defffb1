use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::field::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TorusMode {
    Additive,
    Multiplicative,
}

/// A semisimple element of a maximal torus, through the values of the
/// simple roots on it.
///
/// Multiplicatively, coordinate `i` is `θ_i ∈ ℚ/ℤ` with `α_i(s) = e^{2πiθ_i}`,
/// kept in `[0, 1)`. Additively, coordinate `i` is `α_i(x) ∈ ℚ`, read in
/// `F_p` when `p > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusElement {
    mode: TorusMode,
    coords: Vec<BigRational>,
    p: u64,
}

fn denominators_coprime(coords: &[BigRational], p: u64) -> bool {
    p == 0 || coords.iter().all(|c| !c.denom().is_multiple_of(&BigInt::from(p)))
}

impl TorusElement {
    pub fn multiplicative(coords: Vec<BigRational>, p: u64) -> Result<TorusElement> {
        Field::new(p)?;
        if !denominators_coprime(&coords, p) {
            return Err(Error::InvalidTorusElement(format!("a denominator is divisible by the characteristic {p}")));
        }
        let coords = coords.into_iter().map(|c| &c - c.floor()).collect();
        Ok(TorusElement { mode: TorusMode::Multiplicative, coords, p })
    }

    pub fn additive(coords: Vec<BigRational>, p: u64) -> Result<TorusElement> {
        Field::new(p)?;
        if !denominators_coprime(&coords, p) {
            return Err(Error::InvalidTorusElement(format!("a coordinate has no image in F_{p}")));
        }
        Ok(TorusElement { mode: TorusMode::Additive, coords, p })
    }

    /// Multiplicative element from `(numerator, denominator)` pairs.
    pub fn from_angles(angles: &[(i64, i64)], p: u64) -> Result<TorusElement> {
        TorusElement::multiplicative(ratios(angles)?, p)
    }

    pub fn from_values(values: &[(i64, i64)], p: u64) -> Result<TorusElement> {
        TorusElement::additive(ratios(values)?, p)
    }

    pub fn identity(rank: usize, p: u64) -> TorusElement {
        TorusElement { mode: TorusMode::Multiplicative, coords: vec![BigRational::zero(); rank], p }
    }

    pub fn mode(&self) -> TorusMode {
        self.mode
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// Whether the root with simple-root coordinates `c` vanishes on the
    /// element: `α(s) = 1`, or `dα(x) = 0`.
    pub fn kills(&self, c: &[i64]) -> bool {
        let value = c.iter().zip(&self.coords).fold(BigRational::zero(), |acc, (&k, x)| acc + x * BigInt::from(k));
        match self.mode {
            TorusMode::Multiplicative => value.is_integer(),
            TorusMode::Additive if self.p == 0 => value.is_zero(),
            TorusMode::Additive => {
                let p = BigInt::from(self.p);
                value.numer().is_multiple_of(&p)
            }
        }
    }

    /// Common denominator of the coordinates.
    pub fn order(&self) -> BigInt {
        self.coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

fn ratios(pairs: &[(i64, i64)]) -> Result<Vec<BigRational>> {
    pairs
        .iter()
        .map(|&(a, b)| {
            if b == 0 {
                Err(Error::InvalidTorusElement("zero denominator".into()))
            } else {
                Ok(BigRational::new(a.into(), b.into()))
            }
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct TorusRepr {
    mode: TorusMode,
    coords: Vec<String>,
    p: u64,
}

impl Serialize for TorusElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TorusRepr { mode: self.mode, coords: self.coords.iter().map(ToString::to_string).collect(), p: self.p }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TorusElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = TorusRepr::deserialize(d)?;
        let coords = repr
            .coords
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        match repr.mode {
            TorusMode::Multiplicative => TorusElement::multiplicative(coords, repr.p),
            TorusMode::Additive => TorusElement::additive(coords, repr.p),
        }
        .map_err(D::Error::custom)
    }
}
