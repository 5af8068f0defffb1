use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::centralizer::{in_sp_group, in_sp_lie, Ambient};
use crate::exactnum::field::{Field, FieldElem};
use crate::exactnum::matrix::ExactMatrix;
use crate::exactnum::poly::{resultant, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MapKind {
    /// `g ↦ g - I` on `GL_n`.
    #[serde(rename = "gl")]
    GlShift,
    /// `g ↦ g - (tr g / n) I` on `SL_n`, `p ∤ n`.
    #[serde(rename = "sl")]
    SlTraceShift,
    /// `g ↦ (g - g⁻¹)/2` on `Sp_4`, `p ≠ 2`.
    #[serde(rename = "sp4")]
    Sp4Cayley,
}

impl std::str::FromStr for MapKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<MapKind> {
        match s {
            "gl" => Ok(MapKind::GlShift),
            "sl" => Ok(MapKind::SlTraceShift),
            "sp4" | "sp" => Ok(MapKind::Sp4Cayley),
            _ => Err(Error::Parse(format!("unknown map {s:?}; expected gl, sl or sp4"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LogLikeMap {
    pub kind: MapKind,
    pub n: usize,
    pub p: u64,
}

impl LogLikeMap {
    pub fn new(kind: MapKind, n: usize, p: u64) -> Result<LogLikeMap> {
        Field::new(p)?;
        if n == 0 {
            return Err(Error::DimensionMismatch("n must be positive".into()));
        }
        match kind {
            MapKind::GlShift => {}
            MapKind::SlTraceShift => {
                if p != 0 && n as u64 % p == 0 {
                    return Err(Error::Characteristic(format!("p = {p} divides n = {n}")));
                }
            }
            MapKind::Sp4Cayley => {
                if n != 4 {
                    return Err(Error::DimensionMismatch(format!("Sp4 map needs n = 4, got {n}")));
                }
                if p == 2 {
                    return Err(Error::Characteristic("Sp4 map needs p != 2".into()));
                }
            }
        }
        Ok(LogLikeMap { kind, n, p })
    }

    pub fn gl(n: usize, p: u64) -> Result<LogLikeMap> {
        LogLikeMap::new(MapKind::GlShift, n, p)
    }

    pub fn sl(n: usize, p: u64) -> Result<LogLikeMap> {
        LogLikeMap::new(MapKind::SlTraceShift, n, p)
    }

    pub fn sp4(p: u64) -> Result<LogLikeMap> {
        LogLikeMap::new(MapKind::Sp4Cayley, 4, p)
    }

    pub fn field(&self) -> Field {
        Field::new(self.p).expect("validated")
    }

    pub fn ambient(&self) -> Ambient {
        match self.kind {
            MapKind::GlShift => Ambient::Gl,
            MapKind::SlTraceShift => Ambient::Sl,
            MapKind::Sp4Cayley => Ambient::Sp,
        }
    }

    fn check_shape(&self, m: &ExactMatrix) -> Result<()> {
        if m.n() != self.n {
            return Err(Error::DimensionMismatch(format!("expected {}x{}, got {}x{}", self.n, self.n, m.n(), m.n())));
        }
        if m.field() != self.field() {
            return Err(Error::FieldMismatch(format!("expected {}, got {}", self.field(), m.field())));
        }
        Ok(())
    }

    pub fn in_group(&self, g: &ExactMatrix) -> bool {
        match self.kind {
            MapKind::GlShift => !g.det().is_zero(),
            MapKind::SlTraceShift => g.det().is_one(),
            MapKind::Sp4Cayley => in_sp_group(g),
        }
    }

    pub fn in_lie_algebra(&self, x: &ExactMatrix) -> bool {
        match self.kind {
            MapKind::GlShift => true,
            MapKind::SlTraceShift => x.trace().is_zero(),
            MapKind::Sp4Cayley => in_sp_lie(x),
        }
    }

    pub fn check_group(&self, g: &ExactMatrix) -> Result<()> {
        self.check_shape(g)?;
        if !self.in_group(g) {
            let group = match self.kind {
                MapKind::GlShift => "GL_n",
                MapKind::SlTraceShift => "SL_n",
                MapKind::Sp4Cayley => "Sp_4",
            };
            return Err(Error::NotInGroup(group.into()));
        }
        Ok(())
    }

    /// `λ(g)`.
    pub fn apply(&self, g: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_group(g)?;
        Ok(self.apply_unchecked(g))
    }

    pub(crate) fn apply_unchecked(&self, g: &ExactMatrix) -> ExactMatrix {
        let field = self.field();
        match self.kind {
            MapKind::GlShift => g.shift(&field.one()),
            MapKind::SlTraceShift => {
                let c = &g.trace() / &field.from_i64(self.n as i64);
                g.shift(&c)
            }
            MapKind::Sp4Cayley => {
                let inv = g.inverse().expect("group elements are invertible");
                (g - &inv).scale(&field.from_i64(2).inv().expect("p != 2"))
            }
        }
    }

    /// Whether `x` lies in the image locus `V_λ`: `det(x + I) ≠ 0` for the
    /// shift on `GL_n`, `R(x) ≠ 0` for the trace shift on `SL_n`.
    pub fn in_image_locus(&self, x: &ExactMatrix) -> Result<bool> {
        self.check_shape(x)?;
        match self.kind {
            MapKind::GlShift => Ok(!x.shift(&-&self.field().one()).det().is_zero()),
            MapKind::SlTraceShift => Ok(etale_certificate(self.n, self.p, x)?.in_locus),
            MapKind::Sp4Cayley => Err(Error::Characteristic("no image locus is modelled for the Sp4 map".into())),
        }
    }

    /// Inverse of the shift on `GL_n`: `x ↦ x + I`.
    pub fn gl_inverse(&self, x: &ExactMatrix) -> Result<ExactMatrix> {
        if self.kind != MapKind::GlShift {
            return Err(Error::Characteristic("only the GL shift is inverted".into()));
        }
        self.check_shape(x)?;
        let g = x.shift(&-&self.field().one());
        if g.det().is_zero() {
            return Err(Error::OutsideEtaleLocus("x + I is singular".into()));
        }
        Ok(g)
    }
}

/// Certificate for the trace shift on `SL_n` at `x ∈ sl_n`: the fiber
/// `λ⁻¹(x)` is `{x + tI : p_x(t) = 0}` with `p_x(t) = det(x + tI) - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaleCertificate {
    pub x: ExactMatrix,
    pub p_x: Vec<String>,
    pub resultant_value: String,
    pub in_locus: bool,
    pub fiber_size: usize,
}

/// `det(x + tI) - 1`.
pub fn fiber_polynomial(x: &ExactMatrix) -> Poly {
    let one = Poly::constant(x.field().one());
    // det(x + tI) = det(tI - (-x))
    (-x).char_poly().sub(&one)
}

pub fn etale_certificate(n: usize, p: u64, x: &ExactMatrix) -> Result<EtaleCertificate> {
    let map = LogLikeMap::sl(n, p)?;
    map.check_shape(x)?;
    if !x.trace().is_zero() {
        return Err(Error::AmbientMismatch("sl (trace is not zero)".into()));
    }
    let px = fiber_polynomial(x);
    let r: FieldElem = resultant(&px, &px.derivative())?;
    let fiber_size = px.distinct_root_count()?;
    let in_locus = !r.is_zero();
    debug_assert_eq!(in_locus, fiber_size == n);
    Ok(EtaleCertificate {
        x: x.clone(),
        p_x: px.coeffs().iter().map(ToString::to_string).collect(),
        resultant_value: r.to_string(),
        in_locus,
        fiber_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_shift() {
        let f = Field::Prime(101);
        let map = LogLikeMap::gl(3, 101).unwrap();
        assert!(map.apply(&ExactMatrix::identity(f, 3)).unwrap().is_zero());
        assert!(map.apply(&ExactMatrix::zero(f, 3)).is_err());
        let x = ExactMatrix::jordan_block(&f.from_i64(5), 3);
        assert_eq!(map.apply(&map.gl_inverse(&x).unwrap()).unwrap(), x);
        assert!(!map.in_image_locus(&ExactMatrix::scalar(f, 3, &-&f.one())).unwrap());
    }

    #[test]
    fn sl_gate() {
        assert!(LogLikeMap::sl(2, 2).is_err());
        assert!(LogLikeMap::sl(3, 3).is_err());
        assert!(LogLikeMap::sl(3, 7).is_ok());
        assert!(LogLikeMap::sp4(2).is_err());
        assert!(LogLikeMap::new(MapKind::Sp4Cayley, 2, 5).is_err());
    }

    #[test]
    fn sp4_torus() {
        let f = Field::Prime(7);
        let map = LogLikeMap::sp4(7).unwrap();
        let (a, b) = (f.from_i64(3), f.from_i64(5));
        let (ai, bi) = (a.inv().unwrap(), b.inv().unwrap());
        let t = ExactMatrix::diag(f, &[a.clone(), b.clone(), ai.clone(), bi.clone()]);
        let half = f.from_i64(2).inv().unwrap();
        let expected =
            ExactMatrix::diag(f, &[&(&a - &ai) * &half, &(&b - &bi) * &half, &(&ai - &a) * &half, &(&bi - &b) * &half]);
        let x = map.apply(&t).unwrap();
        assert_eq!(x, expected);
        assert!(map.in_lie_algebra(&x));
        let s = ExactMatrix::diag(f, &[f.one(), -&f.one(), f.one(), -&f.one()]);
        assert!(map.apply(&s).unwrap().is_zero());
    }

    #[test]
    fn certificates() {
        let f = Field::Prime(7);
        let zero = etale_certificate(2, 7, &ExactMatrix::zero(f, 2)).unwrap();
        assert!(zero.in_locus);
        assert_eq!(zero.fiber_size, 2);
        let e12 = ExactMatrix::unit(f, 2, 0, 1);
        let c = etale_certificate(2, 7, &e12).unwrap();
        assert_eq!(c.p_x, vec!["6", "0", "1"]);
        assert_eq!(c.resultant_value, f.from_i64(-4).to_string());
        assert!(c.in_locus);
        assert!(etale_certificate(2, 2, &ExactMatrix::zero(Field::Prime(2), 2)).is_err());
        let q = Field::Rational;
        let c = etale_certificate(2, 0, &ExactMatrix::unit(q, 2, 0, 1)).unwrap();
        assert_eq!(c.resultant_value, "-4");
        assert!(etale_certificate(2, 7, &ExactMatrix::identity(f, 2)).is_err());
        let c = etale_certificate(3, 7, &ExactMatrix::zero(f, 3)).unwrap();
        assert_eq!(c.fiber_size, 3);
    }
}
