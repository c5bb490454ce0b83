//! Exact and floating scalars.
//!
//! [`Real`] and [`ComplexValue`] carry either exact rationals (Gaussian
//! rationals for the complex case) or IEEE doubles. Arithmetic between two
//! exact operands stays exact; any floating operand makes the result floating.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Default tolerance for sign decisions on floating values.
pub const FLOAT_TOL: f64 = 1e-12;

/// Integer square root if `n` is a perfect square.
pub fn perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Rational square root if `q` is the square of a rational.
pub fn sqrt_rational(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = perfect_square(q.numer())?;
    let d = perfect_square(q.denom())?;
    Some(BigRational::new(n, d))
}

/// Lossy conversion of a big rational to `f64`.
pub fn rat_to_f64(q: &BigRational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Fall back on scaled division for huge operands.
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift = (nb - db).clamp(-2000, 2000);
    let scaled = if shift > 0 {
        BigRational::new(q.numer().clone(), q.denom() << (shift as usize))
    } else {
        BigRational::new(q.numer() << ((-shift) as usize), q.denom().clone())
    };
    scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
}

/// Exact rational equal to a finite double.
pub fn rat_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// `n/d` as a big rational. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A real number, exact or floating.
#[derive(Clone, Debug)]
pub enum Real {
    Exact(BigRational),
    Float(f64),
}

impl Real {
    pub fn zero() -> Self {
        Real::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Real::Exact(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Real::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Real::Exact(ratio(n, d))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Exact(q) => rat_to_f64(q),
            Real::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Real::Exact(q) => Some(q),
            Real::Float(_) => None,
        }
    }

    pub fn abs(&self) -> Real {
        match self {
            Real::Exact(q) => Real::Exact(q.abs()),
            Real::Float(x) => Real::Float(x.abs()),
        }
    }

    pub fn square(&self) -> Real {
        self * self
    }

    /// Sign of the value; floating values within `tol` of zero count as zero.
    pub fn sign_tol(&self, tol: f64) -> Ordering {
        match self {
            Real::Exact(q) => q.cmp(&BigRational::zero()),
            Real::Float(x) => {
                if x.abs() <= tol {
                    Ordering::Equal
                } else if *x > 0.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    /// Compare with tolerance applied to floating differences.
    pub fn cmp_tol(&self, other: &Real, tol: f64) -> Ordering {
        (self - other).sign_tol(tol)
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.sign_tol(tol) == Ordering::Equal
    }

    /// Square root, exact when the argument is a rational square.
    pub fn sqrt(&self) -> Real {
        match self {
            Real::Exact(q) => match sqrt_rational(q) {
                Some(r) => Real::Exact(r),
                None => Real::Float(rat_to_f64(q).sqrt()),
            },
            Real::Float(x) => Real::Float(x.sqrt()),
        }
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real::Float(x)
    }
}

impl From<BigRational> for Real {
    fn from(q: BigRational) -> Self {
        Real::Exact(q)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Real::Exact(a), Real::Exact(b)) => a == b,
            _ => self.to_f64() == other.to_f64(),
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(q) => write!(f, "{}", q),
            Real::Float(x) => write!(f, "{}", x),
        }
    }
}

macro_rules! real_binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl<'a> $tr<&'a Real> for &'a Real {
            type Output = Real;
            fn $m(self, rhs: &'a Real) -> Real {
                match (self, rhs) {
                    (Real::Exact(a), Real::Exact(b)) => Real::Exact(a $op b),
                    _ => Real::Float(self.to_f64() $op rhs.to_f64()),
                }
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                &self $op &rhs
            }
        }
    };
}

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);

impl<'a> Div<&'a Real> for &'a Real {
    type Output = Real;
    fn div(self, rhs: &'a Real) -> Real {
        match (self, rhs) {
            (Real::Exact(a), Real::Exact(b)) if !b.is_zero() => Real::Exact(a / b),
            _ => Real::Float(self.to_f64() / rhs.to_f64()),
        }
    }
}

impl Div<Real> for Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        &self / &rhs
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        match self {
            Real::Exact(q) => Real::Exact(-q),
            Real::Float(x) => Real::Float(-x),
        }
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        -(self.clone())
    }
}

/// A Gaussian rational `re + im i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }

    /// Total bit size of numerators and denominators.
    pub fn bit_size(&self) -> u64 {
        self.re.numer().bits() + self.re.denom().bits() + self.im.numer().bits() + self.im.denom().bits()
    }

    fn add(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }

    fn sub(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }

    fn mul(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }

    fn div(&self, o: &Self) -> Option<Self> {
        let n = o.norm_sqr();
        if n.is_zero() {
            return None;
        }
        let num = self.mul(&o.conj());
        Some(GaussianRational::new(num.re / &n, num.im / &n))
    }

    /// Principal square root when it is again a Gaussian rational.
    pub fn sqrt(&self) -> Option<Self> {
        let (p, q) = (&self.re, &self.im);
        if q.is_zero() {
            if !p.is_negative() {
                return Some(GaussianRational::new(sqrt_rational(p)?, BigRational::zero()));
            }
            return Some(GaussianRational::new(BigRational::zero(), sqrt_rational(&-p.clone())?));
        }
        let m = sqrt_rational(&self.norm_sqr())?;
        let two = BigRational::from_integer(BigInt::from(2));
        let re = sqrt_rational(&((&m + p) / &two))?;
        let im = q / (&two * &re);
        Some(GaussianRational::new(re, im))
    }
}

/// A complex number, exact Gaussian rational or double precision.
#[derive(Clone, Debug)]
pub enum ComplexValue {
    Exact(GaussianRational),
    Float(Complex64),
}

impl ComplexValue {
    pub fn zero() -> Self {
        ComplexValue::Exact(GaussianRational::zero())
    }

    pub fn one() -> Self {
        ComplexValue::int(1, 0)
    }

    pub fn i() -> Self {
        ComplexValue::int(0, 1)
    }

    /// Exact `re + im i` with integer parts.
    pub fn int(re: i64, im: i64) -> Self {
        ComplexValue::Exact(GaussianRational::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        ))
    }

    /// Exact `rn/rd + (in/id) i`.
    pub fn ratio(rn: i64, rd: i64, inum: i64, id: i64) -> Self {
        ComplexValue::Exact(GaussianRational::new(ratio(rn, rd), ratio(inum, id)))
    }

    pub fn exact(re: BigRational, im: BigRational) -> Self {
        ComplexValue::Exact(GaussianRational::new(re, im))
    }

    pub fn float(re: f64, im: f64) -> Self {
        ComplexValue::Float(Complex64::new(re, im))
    }

    /// Build from two reals; exact iff both are exact.
    pub fn from_reals(re: Real, im: Real) -> Self {
        match (re, im) {
            (Real::Exact(a), Real::Exact(b)) => ComplexValue::exact(a, b),
            (a, b) => ComplexValue::float(a.to_f64(), b.to_f64()),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ComplexValue::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&GaussianRational> {
        match self {
            ComplexValue::Exact(g) => Some(g),
            ComplexValue::Float(_) => None,
        }
    }

    /// Same value with floating representation.
    pub fn to_float(&self) -> ComplexValue {
        ComplexValue::Float(self.to_complex64())
    }

    pub fn to_complex64(&self) -> Complex64 {
        match self {
            ComplexValue::Exact(g) => g.to_complex64(),
            ComplexValue::Float(z) => *z,
        }
    }

    pub fn re(&self) -> Real {
        match self {
            ComplexValue::Exact(g) => Real::Exact(g.re.clone()),
            ComplexValue::Float(z) => Real::Float(z.re),
        }
    }

    pub fn im(&self) -> Real {
        match self {
            ComplexValue::Exact(g) => Real::Exact(g.im.clone()),
            ComplexValue::Float(z) => Real::Float(z.im),
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            ComplexValue::Exact(g) => ComplexValue::Exact(g.conj()),
            ComplexValue::Float(z) => ComplexValue::Float(z.conj()),
        }
    }

    /// `|z|^2`.
    pub fn norm_sqr(&self) -> Real {
        match self {
            ComplexValue::Exact(g) => Real::Exact(g.norm_sqr()),
            ComplexValue::Float(z) => Real::Float(z.norm_sqr()),
        }
    }

    pub fn abs_f64(&self) -> f64 {
        self.to_complex64().norm()
    }

    /// Exact zero, or floating `0.0 + 0.0i`.
    pub fn is_zero(&self) -> bool {
        match self {
            ComplexValue::Exact(g) => g.is_zero(),
            ComplexValue::Float(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    /// Zero test with a modulus tolerance for floating values.
    pub fn is_zero_tol(&self, tol: f64) -> bool {
        match self {
            ComplexValue::Exact(g) => g.is_zero(),
            ComplexValue::Float(z) => z.norm() <= tol,
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Principal square root, exact when possible.
    pub fn sqrt(&self) -> Self {
        if let ComplexValue::Exact(g) = self {
            if let Some(r) = g.sqrt() {
                return ComplexValue::Exact(r);
            }
        }
        ComplexValue::Float(self.to_complex64().sqrt())
    }

    /// Division that reports division by zero instead of producing NaN.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        match (self, rhs) {
            (ComplexValue::Exact(a), ComplexValue::Exact(b)) => a.div(b).map(ComplexValue::Exact),
            _ => {
                let d = rhs.to_complex64();
                if d.re == 0.0 && d.im == 0.0 {
                    None
                } else {
                    Some(ComplexValue::Float(self.to_complex64() / d))
                }
            }
        }
    }

    pub fn scale(&self, k: &Real) -> Self {
        self * &ComplexValue::from_reals(k.clone(), Real::zero())
    }

    /// Equality up to `tol` in modulus; exact pairs compare exactly.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        match (self, other) {
            (ComplexValue::Exact(a), ComplexValue::Exact(b)) => a == b,
            _ => (self.to_complex64() - other.to_complex64()).norm() <= tol,
        }
    }

    /// Size of the exact representation in bits, zero for floats.
    pub fn bit_size(&self) -> u64 {
        match self {
            ComplexValue::Exact(g) => g.bit_size(),
            ComplexValue::Float(_) => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            ComplexValue::Exact(_) => true,
            ComplexValue::Float(z) => z.re.is_finite() && z.im.is_finite(),
        }
    }
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        ComplexValue::Float(z)
    }
}

impl From<GaussianRational> for ComplexValue {
    fn from(g: GaussianRational) -> Self {
        ComplexValue::Exact(g)
    }
}

impl PartialEq for ComplexValue {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ComplexValue::Exact(a), ComplexValue::Exact(b)) => a == b,
            _ => self.to_complex64() == other.to_complex64(),
        }
    }
}

macro_rules! cv_binop {
    ($tr:ident, $m:ident, $gm:ident, $op:tt) => {
        impl<'a> $tr<&'a ComplexValue> for &'a ComplexValue {
            type Output = ComplexValue;
            fn $m(self, rhs: &'a ComplexValue) -> ComplexValue {
                match (self, rhs) {
                    (ComplexValue::Exact(a), ComplexValue::Exact(b)) => ComplexValue::Exact(a.$gm(b)),
                    _ => ComplexValue::Float(self.to_complex64() $op rhs.to_complex64()),
                }
            }
        }
        impl $tr<ComplexValue> for ComplexValue {
            type Output = ComplexValue;
            fn $m(self, rhs: ComplexValue) -> ComplexValue {
                &self $op &rhs
            }
        }
    };
}

cv_binop!(Add, add, add, +);
cv_binop!(Sub, sub, sub, -);
cv_binop!(Mul, mul, mul, *);

impl<'a> Div<&'a ComplexValue> for &'a ComplexValue {
    type Output = ComplexValue;
    /// Panics on exact division by zero.
    fn div(self, rhs: &'a ComplexValue) -> ComplexValue {
        match (self, rhs) {
            (ComplexValue::Exact(a), ComplexValue::Exact(b)) => {
                ComplexValue::Exact(a.div(b).expect("exact division by zero"))
            }
            _ => ComplexValue::Float(self.to_complex64() / rhs.to_complex64()),
        }
    }
}

impl Div<ComplexValue> for ComplexValue {
    type Output = ComplexValue;
    fn div(self, rhs: ComplexValue) -> ComplexValue {
        &self / &rhs
    }
}

impl Neg for ComplexValue {
    type Output = ComplexValue;
    fn neg(self) -> ComplexValue {
        match self {
            ComplexValue::Exact(g) => ComplexValue::Exact(GaussianRational::new(-g.re, -g.im)),
            ComplexValue::Float(z) => ComplexValue::Float(-z),
        }
    }
}

impl Neg for &ComplexValue {
    type Output = ComplexValue;
    fn neg(self) -> ComplexValue {
        -(self.clone())
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexValue::Exact(g) => {
                if g.im.is_zero() {
                    return write!(f, "{}", fmt_rat(&g.re));
                }
                let im_abs = g.im.abs();
                let im_txt = if im_abs.is_one() { String::new() } else { fmt_rat(&im_abs) };
                let sign = if g.im.is_negative() { "-" } else { "+" };
                if g.re.is_zero() {
                    let lead = if g.im.is_negative() { "-" } else { "" };
                    write!(f, "{}{}i", lead, im_txt)
                } else {
                    write!(f, "{}{}{}i", fmt_rat(&g.re), sign, im_txt)
                }
            }
            ComplexValue::Float(z) => {
                if z.im < 0.0 || (z.im == 0.0 && z.im.is_sign_negative()) {
                    write!(f, "{}-{}i", z.re, -z.im)
                } else {
                    write!(f, "{}+{}i", z.re, z.im)
                }
            }
        }
    }
}

impl Serialize for ComplexValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ComplexValue::Exact(g) => {
                let mut m = serializer.serialize_map(Some(5))?;
                m.serialize_entry("mode", "exact")?;
                m.serialize_entry("re_num", &g.re.numer().to_string())?;
                m.serialize_entry("re_den", &g.re.denom().to_string())?;
                m.serialize_entry("im_num", &g.im.numer().to_string())?;
                m.serialize_entry("im_den", &g.im.denom().to_string())?;
                m.end()
            }
            ComplexValue::Float(z) => {
                let mut m = serializer.serialize_map(Some(3))?;
                m.serialize_entry("mode", "floating")?;
                m.serialize_entry("re", &z.re)?;
                m.serialize_entry("im", &z.im)?;
                m.end()
            }
        }
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Real::Exact(q) => {
                let mut m = serializer.serialize_map(Some(3))?;
                m.serialize_entry("mode", "exact")?;
                m.serialize_entry("num", &q.numer().to_string())?;
                m.serialize_entry("den", &q.denom().to_string())?;
                m.end()
            }
            Real::Float(x) => {
                let mut m = serializer.serialize_map(Some(2))?;
                m.serialize_entry("mode", "floating")?;
                m.serialize_entry("value", x)?;
                m.end()
            }
        }
    }
}
