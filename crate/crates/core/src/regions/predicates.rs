use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::dynamics::{self, classical_gap, SchottkyIndex};
use crate::error::{Error, Result};
use crate::moebius::{ComplexValue, Real};

/// Tolerance for boundary decisions on floating input.
pub const BOUNDARY_TOL: f64 = 1e-12;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicalStatus {
    Interior,
    Boundary,
    Outside,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NsdcStatus {
    ExteriorRegion,
    Boundary,
    Inside,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcfPiece {
    A1,
    A2,
}

/// Which reflected copy of a first-quadrant piece contains the point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reflection {
    Identity,
    Negate,
    Conjugate,
    NegateConjugate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NcfTag {
    pub piece: NcfPiece,
    pub reflection: Reflection,
}

impl fmt::Display for NcfTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.piece {
            NcfPiece::A1 => "A1",
            NcfPiece::A2 => "A2",
        };
        match self.reflection {
            Reflection::Identity => write!(f, "{}", p),
            Reflection::Negate => write!(f, "-{}", p),
            Reflection::Conjugate => write!(f, "conj {}", p),
            Reflection::NegateConjugate => write!(f, "-conj {}", p),
        }
    }
}

impl Serialize for NcfTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialPoint {
    PlusTwo,
    MinusTwo,
    PlusI,
    MinusI,
}

impl fmt::Display for SpecialPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialPoint::PlusTwo => "+2",
            SpecialPoint::MinusTwo => "-2",
            SpecialPoint::PlusI => "+i",
            SpecialPoint::MinusI => "-i",
        })
    }
}

impl Serialize for SpecialPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Discreteness {
    NonDiscrete,
    Discrete,
    Indeterminate,
}

fn tol_for(z: &ComplexValue, tol: f64) -> f64 {
    if z.is_exact() {
        0.0
    } else {
        tol
    }
}

pub fn in_classical_ts(lambda: &ComplexValue) -> ClassicalStatus {
    in_classical_ts_tol(lambda, BOUNDARY_TOL)
}

pub fn in_classical_ts_tol(lambda: &ComplexValue, tol: f64) -> ClassicalStatus {
    let tol = tol_for(lambda, tol);
    match classical_gap(lambda).sign_tol(tol) {
        Ordering::Less => ClassicalStatus::Outside,
        Ordering::Equal => ClassicalStatus::Boundary,
        Ordering::Greater => ClassicalStatus::Interior,
    }
}

/// NSDC status and whether the `|x| > 2` convention was used.
pub fn in_nsdc(lambda: &ComplexValue) -> (NsdcStatus, bool) {
    in_nsdc_tol(lambda, BOUNDARY_TOL)
}

pub fn in_nsdc_tol(lambda: &ComplexValue, tol: f64) -> (NsdcStatus, bool) {
    let tol = tol_for(lambda, tol);
    let ax = lambda.re().abs();
    let y2 = lambda.im().square();
    if ax.cmp_tol(&Real::int(2), tol) == Ordering::Greater {
        return (NsdcStatus::ExteriorRegion, true);
    }
    let h = &y2 - &(&Real::int(16) - &(&Real::int(8) * &ax));
    let status = match h.sign_tol(tol) {
        Ordering::Greater => NsdcStatus::ExteriorRegion,
        Ordering::Equal => NsdcStatus::Boundary,
        Ordering::Less => NsdcStatus::Inside,
    };
    (status, false)
}

/// Membership in the non-classical T-Schottky region, with the copy tag.
pub fn in_ncf(lambda: &ComplexValue) -> Option<NcfTag> {
    in_ncf_tol(lambda, BOUNDARY_TOL)
}

pub fn in_ncf_tol(lambda: &ComplexValue, tol: f64) -> Option<NcfTag> {
    let tol = tol_for(lambda, tol);
    if classical_gap(lambda).sign_tol(tol) != Ordering::Less {
        return None;
    }
    let x = lambda.re();
    let y = lambda.im();
    let neg_x = x.sign_tol(0.0) == Ordering::Less;
    let neg_y = y.sign_tol(0.0) == Ordering::Less;
    let reflection = match (neg_x, neg_y) {
        (false, false) => Reflection::Identity,
        (true, true) => Reflection::Negate,
        (false, true) => Reflection::Conjugate,
        (true, false) => Reflection::NegateConjugate,
    };
    let u = x.abs();
    let v = y.abs();
    let u2 = u.square();
    let v2 = v.square();
    let three = Real::int(3);
    // theta >= pi/3  <=>  v^2 >= 3 u^2 in the first quadrant
    let steep = v2.cmp_tol(&(&three * &u2), tol) != Ordering::Less;
    let shallow = v2.cmp_tol(&(&three * &u2), tol) != Ordering::Greater;
    let outside_unit = (&u2 + &v2).cmp_tol(&Real::one(), tol) != Ordering::Less;
    let two_minus_u = &Real::int(2) - &u;
    let above_kline = two_minus_u.sign_tol(tol) == Ordering::Less
        || (&three * &v2).cmp_tol(&two_minus_u.square(), tol) != Ordering::Less;
    let piece = if steep && outside_unit {
        NcfPiece::A1
    } else if shallow && above_kline {
        NcfPiece::A2
    } else {
        return None;
    };
    Some(NcfTag { piece, reflection })
}

fn abs_sum(lambda: &ComplexValue) -> Real {
    &lambda.re().abs() + &lambda.im().abs()
}

/// `|x| + |y| <= 1`.
pub fn diamond_member(lambda: &ComplexValue) -> bool {
    let tol = tol_for(lambda, BOUNDARY_TOL);
    abs_sum(lambda).cmp_tol(&Real::one(), tol) != Ordering::Greater
}

/// `|x| + |y| >= 2`.
pub fn lox_par_generators(lambda: &ComplexValue) -> bool {
    let tol = tol_for(lambda, BOUNDARY_TOL);
    abs_sum(lambda).cmp_tol(&Real::int(2), tol) != Ordering::Less
}

pub fn jorgensen_interior(lambda: &ComplexValue) -> bool {
    let tol = tol_for(lambda, BOUNDARY_TOL);
    lambda.norm_sqr().cmp_tol(&Real::ratio(1, 4), tol) == Ordering::Less
}

pub fn special_boundary_point(lambda: &ComplexValue) -> Option<SpecialPoint> {
    let tol = tol_for(lambda, BOUNDARY_TOL);
    [
        (ComplexValue::int(2, 0), SpecialPoint::PlusTwo),
        (ComplexValue::int(-2, 0), SpecialPoint::MinusTwo),
        (ComplexValue::int(0, 1), SpecialPoint::PlusI),
        (ComplexValue::int(0, -1), SpecialPoint::MinusI),
    ]
    .into_iter()
    .find(|(v, _)| lambda.approx_eq(v, tol))
    .map(|(_, t)| t)
}

/// `lambda` is one of `(+-1 +- i)/2`.
pub fn whitehead_point(lambda: &ComplexValue) -> bool {
    let tol = tol_for(lambda, BOUNDARY_TOL);
    [(1, 1), (1, -1), (-1, 1), (-1, -1)]
        .into_iter()
        .any(|(a, b)| lambda.approx_eq(&ComplexValue::ratio(a, 2, b, 2), tol))
}

/// The `n` with `t_n <= |v| < t_{n-1}` for `1/2 < |v| <= 2`.
pub fn annulus_of(v: &ComplexValue) -> Option<i64> {
    let tol = tol_for(v, BOUNDARY_TOL);
    let r2 = v.norm_sqr();
    if r2.cmp_tol(&Real::ratio(1, 4), tol) != Ordering::Greater || r2.cmp_tol(&Real::int(4), tol) == Ordering::Greater {
        return None;
    }
    if r2.cmp_tol(&Real::int(4), tol) == Ordering::Equal {
        return Some(-1);
    }
    if r2.cmp_tol(&Real::one(), tol) != Ordering::Less {
        return Some(0);
    }
    if r2.cmp_tol(&Real::ratio(1, 2), tol) != Ordering::Less {
        return Some(1);
    }
    // log2 |v|^2 >= -2 + 2^{1-n}
    let l = r2.to_f64().log2();
    (2..=1100i64).find(|&n| l >= -2.0 + 2f64.powi((1 - n) as i32))
}

/// Full classification record of one parameter.
#[derive(Clone, Debug, Serialize)]
pub struct RegionReport {
    pub schema_version: u32,
    pub lambda: ComplexValue,
    pub approximate: bool,
    pub jorgensen_interior: bool,
    pub classical_ts: ClassicalStatus,
    pub nsdc: NsdcStatus,
    /// Set when `|x| > 2` and the exterior region was assigned by convention.
    pub nsdc_convention: bool,
    pub ncf_member: Option<NcfTag>,
    pub diamond_member: bool,
    pub lox_par_generators: bool,
    pub nth_classical: Option<u32>,
    pub schottky_index: SchottkyIndex,
    pub special_boundary_point: Option<SpecialPoint>,
    pub annulus_index: Option<i64>,
    pub whitehead_point: bool,
    pub discreteness: Discreteness,
}

pub fn classify(lambda: &ComplexValue) -> Result<RegionReport> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let classical_ts = in_classical_ts(lambda);
    let (nsdc, nsdc_convention) = in_nsdc(lambda);
    let ncf_member = in_ncf(lambda);
    let jorg = jorgensen_interior(lambda);
    let schottky_index = dynamics::schottky_index(lambda)?;
    let discreteness = if jorg {
        Discreteness::NonDiscrete
    } else if classical_ts != ClassicalStatus::Outside || ncf_member.is_some() {
        Discreteness::Discrete
    } else {
        Discreteness::Indeterminate
    };
    Ok(RegionReport {
        schema_version: SCHEMA_VERSION,
        lambda: lambda.clone(),
        approximate: !lambda.is_exact(),
        jorgensen_interior: jorg,
        classical_ts,
        nsdc,
        nsdc_convention,
        ncf_member,
        diamond_member: diamond_member(lambda),
        lox_par_generators: lox_par_generators(lambda),
        nth_classical: schottky_index.value(),
        schottky_index,
        special_boundary_point: special_boundary_point(lambda),
        annulus_index: annulus_of(lambda),
        whitehead_point: whitehead_point(lambda),
        discreteness,
    })
}
