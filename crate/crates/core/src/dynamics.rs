//! The parameter map `f(z) = -2 z^2`, its iterates and preimages, the radii
//! `t_n`, the nth-classical index and the vertical/lateral operator algebra.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::moebius::{ComplexValue, Real};

/// Exact iterates switch to floating once their bit size passes this.
pub const EXACT_BIT_CAP: u64 = 4096;

/// Hard cap on the iteration depth of [`schottky_index`].
pub const HARD_DEPTH_CAP: u32 = 64;

pub fn f(z: &ComplexValue) -> ComplexValue {
    &ComplexValue::int(-2, 0) * &z.square()
}

/// `f^n(z)`. Exact input stays exact unless the representation outgrows
/// [`EXACT_BIT_CAP`], after which the remaining steps are floating.
pub fn f_iter(z: &ComplexValue, n: u32) -> ComplexValue {
    let mut w = z.clone();
    for _ in 0..n {
        if w.bit_size() > EXACT_BIT_CAP {
            w = w.to_float();
        }
        w = f(&w);
    }
    w
}

/// Orbit `z, f(z), ..., f^n(z)`.
pub fn orbit(z: &ComplexValue, n: u32) -> Vec<ComplexValue> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut w = z.clone();
    out.push(w.clone());
    for _ in 0..n {
        if w.bit_size() > EXACT_BIT_CAP {
            w = w.to_float();
        }
        w = f(&w);
        out.push(w.clone());
    }
    out
}

/// The two roots of `f(z) = w`, principal root first.
pub fn f_preimages(w: &ComplexValue) -> [ComplexValue; 2] {
    let r = (&(-w) / &ComplexValue::int(2, 0)).sqrt();
    let neg = -&r;
    [r, neg]
}

/// `t_n = 2^{-(2^n - 1)/2^n}`; exact for `n <= 0`.
pub fn t_radius(n: i64) -> Result<Real> {
    if n < -1 {
        return Err(Error::BadIndex(n));
    }
    match n {
        -1 => Ok(Real::int(2)),
        0 => Ok(Real::one()),
        _ => {
            let p = 2f64.powi(n.min(1000) as i32);
            Ok(Real::Float(2f64.powf(-(p - 1.0) / p)))
        }
    }
}

/// `|y| - (1 - x^2/4)`: nonnegative exactly on the closed classical region.
pub fn classical_gap(z: &ComplexValue) -> Real {
    let x = z.re();
    let y = z.im();
    let quarter = Real::ratio(1, 4);
    &y.abs() - &(&Real::one() - &(&quarter * &x.square()))
}

/// Closed classical test; floating values use `tol`.
pub fn in_closed_classical(z: &ComplexValue, tol: f64) -> bool {
    classical_gap(z).sign_tol(tol) != Ordering::Less
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NeverReason {
    InsideJorgensen,
    OnJorgensenCircle,
    DepthExhausted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SchottkyIndex {
    /// `f^n(lambda)` is the first iterate in the closed classical region.
    /// `approximate` is set when exact iteration fell back to floating.
    Classical {
        n: u32,
        approximate: bool,
    },
    Never {
        reason: NeverReason,
    },
}

impl SchottkyIndex {
    pub fn value(&self) -> Option<u32> {
        match self {
            SchottkyIndex::Classical { n, .. } => Some(*n),
            SchottkyIndex::Never { .. } => None,
        }
    }
}

/// Depth bound from the modulus law `|f^n| = (2|lambda|)^(2^n)/2`.
pub fn depth_bound(abs_lambda: f64) -> u32 {
    if abs_lambda <= 0.5 {
        return HARD_DEPTH_CAP;
    }
    let l = (2.0 * abs_lambda).ln();
    let k = (4f64.ln() / l).log2().ceil();
    let k = if k.is_finite() { k.max(0.0) } else { HARD_DEPTH_CAP as f64 };
    ((k as i64 + 2).max(8) as u32).min(HARD_DEPTH_CAP)
}

/// Smallest `n` with `f^n(lambda)` in the closed classical region.
pub fn schottky_index(lambda: &ComplexValue) -> Result<SchottkyIndex> {
    schottky_index_tol(lambda, crate::moebius::FLOAT_TOL)
}

pub fn schottky_index_tol(lambda: &ComplexValue, tol: f64) -> Result<SchottkyIndex> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    match lambda.norm_sqr().cmp_tol(&Real::ratio(1, 4), tol) {
        Ordering::Less => return Ok(SchottkyIndex::Never { reason: NeverReason::InsideJorgensen }),
        Ordering::Equal => return Ok(SchottkyIndex::Never { reason: NeverReason::OnJorgensenCircle }),
        Ordering::Greater => {}
    }
    let bound = depth_bound(lambda.abs_f64());
    let mut w = lambda.clone();
    for n in 0..=bound {
        if in_closed_classical(&w, tol) {
            let approximate = lambda.is_exact() && !w.is_exact();
            return Ok(SchottkyIndex::Classical { n, approximate });
        }
        if w.bit_size() > EXACT_BIT_CAP {
            w = w.to_float();
        }
        w = f(&w);
    }
    Ok(SchottkyIndex::Never { reason: NeverReason::DepthExhausted })
}

/// `V(lambda) = -2 lambda^2`.
pub fn vertical(lambda: &ComplexValue) -> ComplexValue {
    f(lambda)
}

/// `L^n(lambda) = n lambda`.
pub fn lateral(lambda: &ComplexValue, n: i64) -> Result<ComplexValue> {
    if n == 0 {
        return Err(Error::ZeroMultiplier);
    }
    Ok(&ComplexValue::int(n, 0) * lambda)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Step {
    V,
    L(i64),
}

/// Operator word, applied right to left.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IterationProgram {
    pub steps: Vec<Step>,
}

impl IterationProgram {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.contains(&Step::L(0)) {
            return Err(Error::MalformedProgram("L0 is not allowed".into()));
        }
        Ok(IterationProgram { steps })
    }

    pub fn empty() -> Self {
        IterationProgram { steps: Vec::new() }
    }
}

impl FromStr for IterationProgram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "V" {
                steps.push(Step::V);
            } else if let Some(rest) = tok.strip_prefix('L') {
                let n: i64 = rest.parse().map_err(|_| Error::MalformedProgram(format!("bad token {:?}", tok)))?;
                steps.push(Step::L(n));
            } else {
                return Err(Error::MalformedProgram(format!("bad token {:?}", tok)));
            }
        }
        IterationProgram::new(steps)
    }
}

impl fmt::Display for IterationProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s {
                Step::V => "V".to_string(),
                Step::L(n) => format!("L{}", n),
            })
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// The map `lambda -> a lambda^(2^k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    pub k: u32,
    #[serde(serialize_with = "ser_bigint")]
    pub a: BigInt,
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl NormalForm {
    pub fn evaluate(&self, lambda: &ComplexValue) -> ComplexValue {
        let mut p = lambda.clone();
        for _ in 0..self.k {
            p = p.square();
        }
        let a = ComplexValue::exact(BigRational::from_integer(self.a.clone()), BigRational::zero());
        &a * &p
    }
}

pub fn normalize_program(p: &IterationProgram) -> Result<NormalForm> {
    let mut k = 0u32;
    let mut a = BigInt::one();
    for step in p.steps.iter().rev() {
        match step {
            Step::L(0) => return Err(Error::MalformedProgram("L0 is not allowed".into())),
            Step::L(n) => a *= BigInt::from(*n),
            Step::V => {
                k += 1;
                a = BigInt::from(-2) * &a * &a;
            }
        }
    }
    Ok(NormalForm { k, a })
}

pub fn run_program(lambda: &ComplexValue, p: &IterationProgram) -> Result<ComplexValue> {
    let mut w = lambda.clone();
    for step in p.steps.iter().rev() {
        w = match step {
            Step::V => vertical(&w),
            Step::L(n) => lateral(&w, *n).map_err(|_| Error::MalformedProgram("L0 is not allowed".into()))?,
        };
    }
    Ok(w)
}

pub fn programs_equal(p: &IterationProgram, q: &IterationProgram) -> Result<bool> {
    Ok(normalize_program(p)? == normalize_program(q)?)
}
