use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use super::scalar::{ComplexValue, Real};
use super::word;
use crate::error::{Error, Result};

/// Tolerance for deciding `tr^2 = 4` on floating traces.
pub const EPS_PAR: f64 = 1e-10;

/// A point of the Riemann sphere.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum SpherePoint {
    Finite(ComplexValue),
    Infinity,
}

impl SpherePoint {
    pub fn finite(&self) -> Option<&ComplexValue> {
        match self {
            SpherePoint::Finite(z) => Some(z),
            SpherePoint::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }

    /// Equality with tolerance on finite floating points.
    pub fn approx_eq(&self, other: &SpherePoint, tol: f64) -> bool {
        match (self, other) {
            (SpherePoint::Infinity, SpherePoint::Infinity) => true,
            (SpherePoint::Finite(a), SpherePoint::Finite(b)) => a.approx_eq(b, tol),
            _ => false,
        }
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpherePoint::Finite(z) => write!(f, "{}", z),
            SpherePoint::Infinity => write!(f, "inf"),
        }
    }
}

/// Dynamical type of a Moebius transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementKind {
    Identity,
    Parabolic,
    Elliptic,
    Loxodromic,
}

/// Matrix `[[a, b], [c, d]]` acting by `z -> (az + b)/(cz + d)`.
///
/// The optional label is the word in `S, s, T, t` that produced the matrix.
/// Equality ignores labels.
#[derive(Clone, Debug, Serialize)]
pub struct MoebiusMatrix {
    pub a: ComplexValue,
    pub b: ComplexValue,
    pub c: ComplexValue,
    pub d: ComplexValue,
    pub label: Option<String>,
}

impl PartialEq for MoebiusMatrix {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && self.c == o.c && self.d == o.d
    }
}

impl MoebiusMatrix {
    pub fn new(a: ComplexValue, b: ComplexValue, c: ComplexValue, d: ComplexValue) -> Self {
        MoebiusMatrix { a, b, c, d, label: None }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        MoebiusMatrix::new(
            ComplexValue::int(a, 0),
            ComplexValue::int(b, 0),
            ComplexValue::int(c, 0),
            ComplexValue::int(d, 0),
        )
    }

    /// Identity with the empty word as label.
    pub fn identity() -> Self {
        MoebiusMatrix::from_ints(1, 0, 0, 1).with_label("")
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }

    pub fn without_label(mut self) -> Self {
        self.label = None;
        self
    }

    pub fn is_exact(&self) -> bool {
        self.a.is_exact() && self.b.is_exact() && self.c.is_exact() && self.d.is_exact()
    }

    pub fn to_float(&self) -> Self {
        MoebiusMatrix {
            a: self.a.to_float(),
            b: self.b.to_float(),
            c: self.c.to_float(),
            d: self.d.to_float(),
            label: self.label.clone(),
        }
    }

    pub fn det(&self) -> ComplexValue {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn trace(&self) -> ComplexValue {
        &self.a + &self.d
    }

    /// Product `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &MoebiusMatrix) -> MoebiusMatrix {
        let label = match (&self.label, &other.label) {
            (Some(x), Some(y)) => Some(format!("{}{}", x, y)),
            _ => None,
        };
        MoebiusMatrix {
            a: &(&self.a * &other.a) + &(&self.b * &other.c),
            b: &(&self.a * &other.b) + &(&self.b * &other.d),
            c: &(&self.c * &other.a) + &(&self.d * &other.c),
            d: &(&self.c * &other.b) + &(&self.d * &other.d),
            label,
        }
    }

    /// Inverse assuming determinant one: the adjugate.
    pub fn inverse(&self) -> MoebiusMatrix {
        MoebiusMatrix {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
            label: self.label.as_deref().map(word::inverse_unchecked),
        }
    }

    /// `c * self * c^{-1}`.
    pub fn conjugate_by(&self, c: &MoebiusMatrix) -> MoebiusMatrix {
        c.compose(self).compose(&c.inverse())
    }

    /// `A B A^{-1} B^{-1}`.
    pub fn commutator(a: &MoebiusMatrix, b: &MoebiusMatrix) -> MoebiusMatrix {
        a.compose(b).compose(&a.inverse()).compose(&b.inverse())
    }

    pub fn neg(&self) -> MoebiusMatrix {
        MoebiusMatrix { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d, label: self.label.clone() }
    }

    /// Equal as Moebius maps, i.e. up to sign.
    pub fn projectively_eq(&self, o: &MoebiusMatrix) -> bool {
        self == o || *self == o.neg()
    }

    /// Entrywise comparison with tolerance (exact pairs compare exactly).
    pub fn approx_eq(&self, o: &MoebiusMatrix, tol: f64) -> bool {
        self.a.approx_eq(&o.a, tol)
            && self.b.approx_eq(&o.b, tol)
            && self.c.approx_eq(&o.c, tol)
            && self.d.approx_eq(&o.d, tol)
    }

    /// Equal to `+-I` within `tol`.
    pub fn is_pm_identity(&self, tol: f64) -> bool {
        let one = ComplexValue::one();
        let zero = ComplexValue::zero();
        let id = MoebiusMatrix::new(one.clone(), zero.clone(), zero, one);
        self.approx_eq(&id, tol) || self.neg().approx_eq(&id, tol)
    }

    /// Image of a point of the sphere.
    pub fn apply(&self, p: &SpherePoint) -> SpherePoint {
        match p {
            SpherePoint::Infinity => match self.a.checked_div(&self.c) {
                Some(v) => SpherePoint::Finite(v),
                None => SpherePoint::Infinity,
            },
            SpherePoint::Finite(z) => {
                let num = &(&self.a * z) + &self.b;
                let den = &(&self.c * z) + &self.d;
                match num.checked_div(&den) {
                    Some(v) => SpherePoint::Finite(v),
                    None => SpherePoint::Infinity,
                }
            }
        }
    }

    /// Image of a finite float point, `None` when it maps to infinity.
    pub fn apply_c64(&self, z: num_complex::Complex64) -> Option<num_complex::Complex64> {
        let (a, b, c, d) = (self.a.to_complex64(), self.b.to_complex64(), self.c.to_complex64(), self.d.to_complex64());
        let den = c * z + d;
        if den.norm() == 0.0 {
            None
        } else {
            Some((a * z + b) / den)
        }
    }

    /// Classification by trace with tolerance `eps` on floating traces.
    pub fn classify(&self, eps: f64) -> ElementKind {
        let tr2 = self.trace().square();
        let four = ComplexValue::int(4, 0);
        let diff = &tr2 - &four;
        let par = match &diff {
            ComplexValue::Exact(g) => g.is_zero(),
            ComplexValue::Float(z) => z.norm() < eps,
        };
        if par {
            let tol = if self.is_exact() { 0.0 } else { eps };
            return if self.is_pm_identity(tol) { ElementKind::Identity } else { ElementKind::Parabolic };
        }
        let im = tr2.im();
        let re = tr2.re();
        let real = im.is_zero_tol(eps);
        if real && re.sign_tol(eps).is_ge() && (&re - &Real::int(4)).sign_tol(eps).is_lt() {
            ElementKind::Elliptic
        } else {
            ElementKind::Loxodromic
        }
    }

    /// Fixed points, one for parabolic elements and two otherwise.
    pub fn fixed_points(&self) -> Result<Vec<SpherePoint>> {
        self.fixed_points_eps(EPS_PAR)
    }

    pub fn fixed_points_eps(&self, eps: f64) -> Result<Vec<SpherePoint>> {
        let kind = self.classify(eps);
        if kind == ElementKind::Identity {
            return Err(Error::IdentityElement);
        }
        let amd = &self.a - &self.d;
        let c_zero = if self.is_exact() { self.c.is_zero() } else { self.c.is_zero_tol(eps) };
        if c_zero {
            // Infinity is fixed; the other fixed point solves (a - d) z = -b.
            if kind == ElementKind::Parabolic {
                return Ok(vec![SpherePoint::Infinity]);
            }
            let z = (-&self.b).checked_div(&amd).ok_or(Error::IdentityElement)?;
            return Ok(vec![SpherePoint::Finite(z), SpherePoint::Infinity]);
        }
        let two_c = &ComplexValue::int(2, 0) * &self.c;
        if kind == ElementKind::Parabolic {
            return Ok(vec![SpherePoint::Finite(&amd / &two_c)]);
        }
        let disc = &self.trace().square() - &(&ComplexValue::int(4, 0) * &self.det());
        let r = disc.sqrt();
        let z1 = &(&amd + &r) / &two_c;
        let z2 = &(&amd - &r) / &two_c;
        Ok(vec![SpherePoint::Finite(z1), SpherePoint::Finite(z2)])
    }

    /// True when `self * o == o * self` (exactly, or within `tol` for floats).
    pub fn commutes_with(&self, o: &MoebiusMatrix, tol: f64) -> bool {
        self.compose(o).approx_eq(&o.compose(self), tol)
    }
}

impl Mul for &MoebiusMatrix {
    type Output = MoebiusMatrix;
    fn mul(self, rhs: &MoebiusMatrix) -> MoebiusMatrix {
        self.compose(rhs)
    }
}

impl fmt::Display for MoebiusMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(lam: &ComplexValue) -> MoebiusMatrix {
        let two_l = &ComplexValue::int(2, 0) * lam;
        MoebiusMatrix::new(ComplexValue::one(), two_l, ComplexValue::zero(), ComplexValue::one()).with_label("T")
    }

    #[test]
    fn inverse_and_labels() {
        let s = MoebiusMatrix::from_ints(1, 0, 1, 1).with_label("S");
        let tt = t(&ComplexValue::int(1, 0));
        let m = s.compose(&tt);
        assert_eq!(m.label.as_deref(), Some("ST"));
        assert_eq!(m.inverse().label.as_deref(), Some("ts"));
        let id = m.compose(&m.inverse());
        assert_eq!(id, MoebiusMatrix::from_ints(1, 0, 0, 1));
        assert_eq!(MoebiusMatrix::identity().compose(&m).label, m.label);
    }

    #[test]
    fn classify_kinds() {
        assert_eq!(MoebiusMatrix::from_ints(1, 0, 1, 1).classify(EPS_PAR), ElementKind::Parabolic);
        assert_eq!(MoebiusMatrix::from_ints(-1, 0, 0, -1).classify(EPS_PAR), ElementKind::Identity);
        assert_eq!(MoebiusMatrix::from_ints(0, -1, 1, 0).classify(EPS_PAR), ElementKind::Elliptic);
        assert_eq!(MoebiusMatrix::from_ints(2, 1, 1, 1).classify(EPS_PAR), ElementKind::Loxodromic);
    }

    #[test]
    fn fixed_points_basic() {
        let s = MoebiusMatrix::from_ints(1, 0, 1, 1);
        assert_eq!(s.fixed_points().unwrap(), vec![SpherePoint::Finite(ComplexValue::zero())]);
        let tt = t(&ComplexValue::int(1, 0));
        assert_eq!(tt.fixed_points().unwrap(), vec![SpherePoint::Infinity]);
        let m = MoebiusMatrix::from_ints(-1, 4, -1, 3);
        assert_eq!(m.fixed_points().unwrap(), vec![SpherePoint::Finite(ComplexValue::int(2, 0))]);
        assert_eq!(MoebiusMatrix::identity().fixed_points(), Err(Error::IdentityElement));
        let h = MoebiusMatrix::from_ints(2, 0, 0, 1);
        assert_eq!(h.fixed_points().unwrap().len(), 2);
    }

    #[test]
    fn apply_infinity() {
        let s = MoebiusMatrix::from_ints(1, 0, 1, 1);
        assert_eq!(s.apply(&SpherePoint::Infinity), SpherePoint::Finite(ComplexValue::one()));
        assert_eq!(s.apply(&SpherePoint::Finite(ComplexValue::int(-1, 0))), SpherePoint::Infinity);
    }
}
