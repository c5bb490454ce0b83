//! Catalog of parameters with non-free groups.
//!
//! Eight families:
//!
//! 1. `p^2/(2(p^2+1)^2)` for `p >= 1` and `1/(2p^2)` for `p >= 2`
//! 2. `4 sin^2(p pi/q)` with `p, q` coprime
//! 3. `p^2/(2q^2)` with `q^2 - N p^2 = 1`, `N` squarefree
//! 4. `p^2/(2q^2)` with `p/q` a convergent of `1/sqrt(N)`
//! 5. the eighteen sporadic values of the set `B`
//! 6. `lambda_0/n^2` with `lambda_0` in families 1-5, 7, 8
//! 7. `(1/2)(k/n)^2` for `k = 1..8`
//! 8. `(m+n)^2/(2 m^2 n^2)`
//!
//! Values in the closed classical region are never reported: those groups
//! are free, so the literal family formulas are cut down to the complement.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::numtheory::{
    convergents_inv_sqrt, divisors_of_square, is_convergent_inv_sqrt, is_squarefree, pell_solutions, rational_approx,
};
use crate::dynamics::in_closed_classical;
use crate::error::{Error, Result};
use crate::moebius::scalar::{perfect_square, ratio};
use crate::moebius::ComplexValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    #[serde(rename = "1")]
    HalfSquares,
    #[serde(rename = "2")]
    Sine,
    #[serde(rename = "3")]
    Pell,
    #[serde(rename = "4")]
    Convergent,
    #[serde(rename = "B")]
    Sporadic,
    #[serde(rename = "6")]
    Divided,
    #[serde(rename = "7")]
    SmallRatio,
    #[serde(rename = "8")]
    UnitSum,
}

pub const ALL_FAMILIES: [Family; 8] = [
    Family::HalfSquares,
    Family::Sine,
    Family::Pell,
    Family::Convergent,
    Family::Sporadic,
    Family::Divided,
    Family::SmallRatio,
    Family::UnitSum,
];

const BASE_FAMILIES: [Family; 7] = [
    Family::HalfSquares,
    Family::Sine,
    Family::Pell,
    Family::Convergent,
    Family::Sporadic,
    Family::SmallRatio,
    Family::UnitSum,
];

impl Family {
    pub fn code(&self) -> &'static str {
        match self {
            Family::HalfSquares => "1",
            Family::Sine => "2",
            Family::Pell => "3",
            Family::Convergent => "4",
            Family::Sporadic => "B",
            Family::Divided => "6",
            Family::SmallRatio => "7",
            Family::UnitSum => "8",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "1" => Family::HalfSquares,
            "2" | "sine" => Family::Sine,
            "3" | "pell" => Family::Pell,
            "4" | "convergent" | "conv" => Family::Convergent,
            "5" | "b" => Family::Sporadic,
            "6" | "divided" => Family::Divided,
            "7" => Family::SmallRatio,
            "8" => Family::UnitSum,
            other => return Err(Error::UnknownName(format!("catalog family {:?}", other))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub family: Family,
    pub params: BTreeMap<String, String>,
    pub value: ComplexValue,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "quality", rename_all = "snake_case")]
pub enum MatchQuality {
    Exact,
    Numeric { tolerance: f64, distance: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogMatch {
    pub entry: CatalogEntry,
    pub quality: MatchQuality,
}

impl CatalogMatch {
    pub fn is_exact(&self) -> bool {
        self.quality == MatchQuality::Exact
    }
}

/// Parameter ranges for enumeration.
#[derive(Clone, Debug)]
pub struct CatalogRange {
    /// Bound on `p, q, n, m` in families 1, 2, 6, 7, 8.
    pub max: u64,
    /// `N` values for families 3 and 4.
    pub n_values: Vec<u64>,
    /// Solutions or convergents per `N`.
    pub count: usize,
}

impl Default for CatalogRange {
    fn default() -> Self {
        CatalogRange { max: 12, n_values: vec![2, 3, 5, 6, 7], count: 3 }
    }
}

#[derive(Clone, Debug)]
pub struct LookupOptions {
    pub tolerance: f64,
    pub max_denominator: i64,
    pub sine_max_q: i64,
    pub divisor_max: u64,
    pub divided_family: bool,
}

impl Default for LookupOptions {
    fn default() -> Self {
        LookupOptions {
            tolerance: 1e-12,
            max_denominator: 1_000_000_000,
            sine_max_q: 64,
            divisor_max: 12,
            divided_family: true,
        }
    }
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn real_exact(q: BigRational) -> ComplexValue {
    ComplexValue::exact(q, BigRational::zero())
}

fn entry(id: String, family: Family, params: BTreeMap<String, String>, value: ComplexValue) -> CatalogEntry {
    let exact = value.is_exact();
    CatalogEntry { id, family, params, value, exact }
}

const SPORADIC_RATIONALS: [(i64, i64); 13] = [
    (1, 2),
    (1, 1),
    (3, 2),
    (9, 50),
    (8, 25),
    (25, 72),
    (8, 81),
    (25, 162),
    (25, 98),
    (9, 8),
    (8, 9),
    (25, 32),
    (25, 18),
];

fn sporadic_irrationals() -> Vec<(&'static str, ComplexValue)> {
    let s3 = 3f64.sqrt();
    vec![
        ("e^(i pi/3)/2", ComplexValue::float(0.25, s3 / 4.0)),
        ("(1+sqrt13)/4", ComplexValue::float((1.0 + 13f64.sqrt()) / 4.0, 0.0)),
        ("(5+sqrt5)/4", ComplexValue::float((5.0 + 5f64.sqrt()) / 4.0, 0.0)),
        ("i/sqrt2", ComplexValue::float(0.0, 0.5f64.sqrt())),
        ("1/sqrt2", ComplexValue::float(0.5f64.sqrt(), 0.0)),
    ]
}

/// The eighteen members of `B` in display order.
pub fn sporadic_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let irr = sporadic_irrationals();
    let order: [usize; 18] = [0, 1, 2, 100, 101, 102, 103, 104, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];
    for k in order {
        if k >= 100 {
            let (name, v) = irr[k - 100].clone();
            out.push(entry(format!("B:{}", name), Family::Sporadic, params(&[("value", name.to_string())]), v));
        } else {
            let (n, d) = SPORADIC_RATIONALS[k];
            let q = ratio(n, d);
            out.push(entry(format!("B:{}", q), Family::Sporadic, params(&[("value", q.to_string())]), real_exact(q)));
        }
    }
    out
}

fn half_sq_a(p: u64) -> BigRational {
    let p = BigInt::from(p);
    let den = BigInt::from(2) * (&p * &p + 1u32) * (&p * &p + 1u32);
    BigRational::new(&p * &p, den)
}

fn sine_value(p: i64, q: i64) -> ComplexValue {
    // Niven: the only rational values of 4 sin^2 at rational angles.
    let r = Integer::gcd(&p, &q);
    let (p, q) = (p / r, q / r);
    let red = p.rem_euclid(q);
    let exact = match (q, red) {
        (6, 1) | (6, 5) => Some(1),
        (4, 1) | (4, 3) => Some(2),
        (3, 1) | (3, 2) => Some(3),
        (2, 1) => Some(4),
        (1, 0) => Some(0),
        _ => None,
    };
    match exact {
        Some(v) => ComplexValue::int(v, 0),
        None => {
            let s = (p as f64 * PI / q as f64).sin();
            ComplexValue::float(4.0 * s * s, 0.0)
        }
    }
}

fn keep(e: &CatalogEntry) -> bool {
    !e.value.is_zero() && !in_closed_classical(&e.value, 1e-12)
}

/// Enumerate a family over the given ranges (classical values are dropped).
pub fn catalog_enumerate(family: Family, range: &CatalogRange) -> Result<Vec<CatalogEntry>> {
    let out = enumerate_raw(family, range)?;
    let out: Vec<CatalogEntry> = out.into_iter().filter(keep).collect();
    if out.is_empty() {
        return Err(Error::EmptyRange(format!("family {} has no members in range", family)));
    }
    Ok(out)
}

fn enumerate_raw(family: Family, range: &CatalogRange) -> Result<Vec<CatalogEntry>> {
    let empty = || Error::EmptyRange(format!("family {}", family));
    let mut out = Vec::new();
    match family {
        Family::HalfSquares => {
            if range.max == 0 {
                return Err(empty());
            }
            for p in 1..=range.max {
                out.push(entry(
                    format!("1a:p={}", p),
                    family,
                    params(&[("p", p.to_string())]),
                    real_exact(half_sq_a(p)),
                ));
            }
            for p in 2..=range.max {
                out.push(entry(
                    format!("1b:p={}", p),
                    family,
                    params(&[("p", p.to_string())]),
                    real_exact(BigRational::new(BigInt::one(), BigInt::from(2 * p * p))),
                ));
            }
        }
        Family::Sine => {
            if range.max < 2 {
                return Err(empty());
            }
            for q in 2..=range.max as i64 {
                for p in 1..q {
                    if Integer::gcd(&p, &q) == 1 {
                        out.push(entry(
                            format!("2:p={},q={}", p, q),
                            family,
                            params(&[("p", p.to_string()), ("q", q.to_string())]),
                            sine_value(p, q),
                        ));
                    }
                }
            }
        }
        Family::Pell | Family::Convergent => {
            if range.n_values.is_empty() || range.count == 0 {
                return Err(empty());
            }
            for &n in &range.n_values {
                if n < 2 || !is_squarefree(n) {
                    continue;
                }
                let sols = if family == Family::Pell {
                    pell_solutions(n, range.count).unwrap_or_default().into_iter().map(|(q, p)| (p, q)).collect()
                } else {
                    convergents_inv_sqrt(n, range.count).unwrap_or_default()
                };
                for (k, (p, q)) in sols.into_iter().enumerate() {
                    let v = BigRational::new(&p * &p, BigInt::from(2) * &q * &q);
                    let tag = if family == Family::Pell { "3" } else { "4" };
                    out.push(entry(
                        format!("{}:N={},k={}", tag, n, k + 1),
                        family,
                        params(&[("N", n.to_string()), ("p", p.to_string()), ("q", q.to_string())]),
                        real_exact(v),
                    ));
                }
            }
        }
        Family::Sporadic => out = sporadic_entries(),
        Family::Divided => {
            if range.max < 2 {
                return Err(empty());
            }
            for base in BASE_FAMILIES {
                let Ok(entries) = catalog_enumerate(base, range) else { continue };
                for e in entries {
                    for n in 2..=range.max {
                        let n2 = ComplexValue::int((n * n) as i64, 0);
                        let v = &e.value / &n2;
                        let mut ps = e.params.clone();
                        ps.insert("n".into(), n.to_string());
                        ps.insert("base".into(), e.id.clone());
                        out.push(entry(format!("6:n={}|{}", n, e.id), family, ps, v));
                    }
                }
            }
        }
        Family::SmallRatio => {
            if range.max == 0 {
                return Err(empty());
            }
            for n in 1..=range.max {
                for k in 1..=8u64 {
                    if Integer::gcd(&k, &n) != 1 {
                        continue;
                    }
                    out.push(entry(
                        format!("7:k={},n={}", k, n),
                        family,
                        params(&[("k", k.to_string()), ("n", n.to_string())]),
                        real_exact(BigRational::new(BigInt::from(k * k), BigInt::from(2 * n * n))),
                    ));
                }
            }
        }
        Family::UnitSum => {
            if range.max == 0 {
                return Err(empty());
            }
            let mx = range.max as i64;
            for m in -mx..=mx {
                for n in m..=mx {
                    if m == 0 || n == 0 || m + n == 0 {
                        continue;
                    }
                    let num = BigInt::from((m + n) * (m + n));
                    let den = BigInt::from(2 * m * m * n * n);
                    out.push(entry(
                        format!("8:m={},n={}", m, n),
                        family,
                        params(&[("m", m.to_string()), ("n", n.to_string())]),
                        real_exact(BigRational::new(num, den)),
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// `(p, q)` with `v = p^2/(2 q^2)`, `gcd(p, q) = 1`.
fn half_square_parts(v: &BigRational) -> Option<(BigInt, BigInt)> {
    let two = BigInt::from(2);
    let (num, den) = (v.numer(), v.denom());
    if den.is_even() {
        let q = perfect_square(&(den / &two))?;
        if (den / &two).is_zero() {
            return None;
        }
        let p = perfect_square(num)?;
        Some((p, q))
    } else {
        let p = perfect_square(&(num * &two))?;
        let q = perfect_square(den)?;
        Some((p, q))
    }
}

/// `sqrt(2 v)` as a reduced positive fraction.
fn sqrt_two_v(v: &BigRational) -> Option<(BigInt, BigInt)> {
    let (p, q) = half_square_parts(v)?;
    Some((p, q))
}

fn member_exact(family: Family, v: &BigRational, opts: &LookupOptions) -> Option<CatalogEntry> {
    if !v.is_positive() {
        return None;
    }
    let fam = family;
    match family {
        Family::HalfSquares => {
            if v.numer().is_one() && v.denom().is_even() {
                if let Some(p) = perfect_square(&(v.denom() / BigInt::from(2))) {
                    if p >= BigInt::from(2) {
                        return Some(entry(
                            format!("1b:p={}", p),
                            fam,
                            params(&[("p", p.to_string())]),
                            real_exact(v.clone()),
                        ));
                    }
                }
            }
            let (a, b) = sqrt_two_v(v)?;
            if a.is_positive() && &a * &a + 1u32 == b {
                return Some(entry(format!("1a:p={}", a), fam, params(&[("p", a.to_string())]), real_exact(v.clone())));
            }
            None
        }
        Family::Sine => {
            let (p, q) = match v.to_integer().to_i64() {
                _ if !v.is_integer() => return None,
                Some(1) => (1, 6),
                Some(2) => (1, 4),
                Some(3) => (1, 3),
                Some(4) => (1, 2),
                _ => return None,
            };
            Some(entry(
                format!("2:p={},q={}", p, q),
                fam,
                params(&[("p", p.to_string()), ("q", q.to_string())]),
                real_exact(v.clone()),
            ))
        }
        Family::Pell => {
            let (p, q) = half_square_parts(v)?;
            if p.is_zero() {
                return None;
            }
            let rem = &q * &q - BigInt::one();
            let p2 = &p * &p;
            if !(&rem % &p2).is_zero() {
                return None;
            }
            let n = (rem / p2).to_u64()?;
            if n < 2 || !is_squarefree(n) {
                return None;
            }
            Some(entry(
                format!("3:N={},p={},q={}", n, p, q),
                fam,
                params(&[("N", n.to_string()), ("p", p.to_string()), ("q", q.to_string())]),
                real_exact(v.clone()),
            ))
        }
        Family::Convergent => {
            let (p, q) = half_square_parts(v)?;
            if p.is_zero() {
                return None;
            }
            let pf = p.to_f64()?;
            let qf = q.to_f64()?;
            let guess = (qf * qf / (pf * pf)).round();
            if !guess.is_finite() || guess > 1e15 {
                return None;
            }
            let g = guess as i64;
            for n in (g - 2).max(2)..=(g + 2) {
                let n = n as u64;
                if is_squarefree(n) && is_convergent_inv_sqrt(n, &p, &q) {
                    return Some(entry(
                        format!("4:N={},p={},q={}", n, p, q),
                        fam,
                        params(&[("N", n.to_string()), ("p", p.to_string()), ("q", q.to_string())]),
                        real_exact(v.clone()),
                    ));
                }
            }
            None
        }
        Family::Sporadic => sporadic_entries().into_iter().find(|e| e.value.as_exact().is_some_and(|g| &g.re == v)),
        Family::Divided => {
            if !opts.divided_family {
                return None;
            }
            for n in 2..=opts.divisor_max {
                let w = v * BigRational::from_integer(BigInt::from(n * n));
                let wv = real_exact(w.clone());
                if in_closed_classical(&wv, 0.0) {
                    break;
                }
                for base in BASE_FAMILIES {
                    if let Some(b) = member_exact(base, &w, opts) {
                        let mut ps = b.params.clone();
                        ps.insert("n".into(), n.to_string());
                        ps.insert("base".into(), b.id.clone());
                        return Some(entry(format!("6:n={}|{}", n, b.id), fam, ps, real_exact(v.clone())));
                    }
                }
            }
            None
        }
        Family::SmallRatio => {
            let (a, b) = sqrt_two_v(v)?;
            if a.is_positive() && a <= BigInt::from(8) {
                return Some(entry(
                    format!("7:k={},n={}", a, b),
                    fam,
                    params(&[("k", a.to_string()), ("n", b.to_string())]),
                    real_exact(v.clone()),
                ));
            }
            None
        }
        Family::UnitSum => {
            let (a, b) = sqrt_two_v(v)?;
            let a = a.to_i128()?;
            let b64 = b.to_u64()?;
            if a <= 0 || b64 > 1_000_000_000_000 {
                return None;
            }
            let b = b64 as i128;
            let b2 = b * b;
            // 1/m + 1/n = a/b  <=>  (a m - b)(a n - b) = b^2
            let mut best: Option<(i128, i128)> = None;
            for d in divisors_of_square(b64) {
                for d in [d as i128, -(d as i128)] {
                    let e = b2 / d;
                    if (d + b) % a != 0 || (e + b) % a != 0 {
                        continue;
                    }
                    let (m, n) = ((d + b) / a, (e + b) / a);
                    if m == 0 || n == 0 {
                        continue;
                    }
                    let (m, n) = if m <= n { (m, n) } else { (n, m) };
                    let better = match best {
                        None => true,
                        Some((bm, bn)) => (m.abs().max(n.abs()), m, n) < (bm.abs().max(bn.abs()), bm, bn),
                    };
                    if better {
                        best = Some((m, n));
                    }
                }
            }
            let (m, n) = best?;
            Some(entry(
                format!("8:m={},n={}", m, n),
                fam,
                params(&[("m", m.to_string()), ("n", n.to_string())]),
                real_exact(v.clone()),
            ))
        }
    }
}

fn sine_member_float(x: f64, opts: &LookupOptions) -> Option<(CatalogEntry, f64)> {
    if !(x > 0.0 && x <= 4.0) {
        return None;
    }
    let theta = ((x.sqrt() / 2.0).min(1.0)).asin() / PI;
    let (p, q) = rational_approx(theta, opts.sine_max_q, 1e-9)?;
    if p <= 0 || Integer::gcd(&p, &q) != 1 {
        return None;
    }
    let v = sine_value(p, q);
    let d = (v.to_complex64().re - x).abs();
    if d <= opts.tolerance {
        let e =
            entry(format!("2:p={},q={}", p, q), Family::Sine, params(&[("p", p.to_string()), ("q", q.to_string())]), v);
        return Some((e, d));
    }
    None
}

fn member_float(family: Family, z: num_complex::Complex64, opts: &LookupOptions) -> Option<(CatalogEntry, f64)> {
    let tol = opts.tolerance;
    let real = z.im.abs() <= tol;
    match family {
        Family::Sine if real => sine_member_float(z.re, opts),
        Family::Sporadic => {
            for e in sporadic_entries() {
                let d = (e.value.to_complex64() - z).norm();
                if d <= tol {
                    return Some((e, d));
                }
            }
            None
        }
        Family::Divided => {
            if !opts.divided_family {
                return None;
            }
            for n in 2..=opts.divisor_max {
                let w = z * (n * n) as f64;
                if in_closed_classical(&ComplexValue::Float(w), 0.0) {
                    break;
                }
                let scaled = LookupOptions { tolerance: tol * (n * n) as f64, ..opts.clone() };
                for base in BASE_FAMILIES {
                    if let Some((b, d)) = member_float(base, w, &scaled) {
                        let mut ps = b.params.clone();
                        ps.insert("n".into(), n.to_string());
                        ps.insert("base".into(), b.id.clone());
                        let v = &b.value / &ComplexValue::int((n * n) as i64, 0);
                        let e = entry(format!("6:n={}|{}", n, b.id), family, ps, v);
                        return Some((e, d / (n * n) as f64));
                    }
                }
            }
            None
        }
        _ if real => {
            let (p, q) = rational_approx(z.re, opts.max_denominator, 1e-15)?;
            let v = ratio(p, q);
            let e = member_exact(family, &v, opts)?;
            let d = (e.value.to_complex64() - z).norm();
            if d <= tol {
                Some((e, d))
            } else {
                None
            }
        }
        _ => None,
    }
}

fn lookup_family(family: Family, value: &ComplexValue, opts: &LookupOptions) -> Option<CatalogMatch> {
    match value {
        ComplexValue::Exact(g) => {
            if !g.im.is_zero() {
                return None;
            }
            member_exact(family, &g.re, opts).map(|entry| CatalogMatch { entry, quality: MatchQuality::Exact })
        }
        ComplexValue::Float(z) => member_float(family, *z, opts).map(|(entry, distance)| CatalogMatch {
            entry,
            quality: MatchQuality::Numeric { tolerance: opts.tolerance, distance },
        }),
    }
}

/// First match in family order.
pub fn catalog_lookup(value: &ComplexValue) -> Option<CatalogMatch> {
    catalog_lookup_with(value, &LookupOptions::default())
}

pub fn catalog_lookup_with(value: &ComplexValue, opts: &LookupOptions) -> Option<CatalogMatch> {
    if value.is_zero_tol(opts.tolerance) || in_closed_classical(value, opts.tolerance) {
        return None;
    }
    ALL_FAMILIES.iter().find_map(|f| lookup_family(*f, value, opts))
}

/// Every family containing the value.
pub fn catalog_lookup_all(value: &ComplexValue, opts: &LookupOptions) -> Vec<CatalogMatch> {
    if value.is_zero_tol(opts.tolerance) || in_closed_classical(value, opts.tolerance) {
        return Vec::new();
    }
    ALL_FAMILIES.iter().filter_map(|f| lookup_family(*f, value, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ComplexValue {
        ComplexValue::ratio(n, d, 0, 1)
    }

    #[test]
    fn eighth_is_family_one() {
        let m = catalog_lookup(&q(1, 8)).unwrap();
        assert_eq!(m.entry.family, Family::HalfSquares);
        assert_eq!(m.entry.id, "1b:p=2");
        assert!(m.is_exact());
    }

    #[test]
    fn one_is_sine_and_sporadic() {
        let m = catalog_lookup(&q(1, 1)).unwrap();
        assert_eq!(m.entry.family, Family::Sine);
        let all = catalog_lookup_all(&q(1, 1), &LookupOptions::default());
        assert!(all.iter().any(|m| m.entry.family == Family::Sporadic));
    }

    #[test]
    fn classical_values_excluded() {
        assert!(catalog_lookup(&q(8, 1)).is_none());
        assert!(catalog_lookup(&q(2, 1)).is_none());
        assert!(catalog_lookup(&q(3, 1)).is_none());
    }

    #[test]
    fn float_sporadic() {
        let v = ComplexValue::float(0.0, 0.5f64.sqrt());
        let m = catalog_lookup(&v).unwrap();
        assert_eq!(m.entry.family, Family::Sporadic);
        assert!(!m.is_exact());
    }

    #[test]
    fn unit_sum_negative() {
        // 1/2 - 1/3 = 1/6
        let v = q(1, 72);
        let all = catalog_lookup_all(&v, &LookupOptions::default());
        assert!(all.iter().any(|m| m.entry.family == Family::UnitSum));
    }

    #[test]
    fn family_names() {
        assert_eq!("pell".parse::<Family>().unwrap(), Family::Pell);
        assert_eq!("B".parse::<Family>().unwrap(), Family::Sporadic);
        assert!("x".parse::<Family>().is_err());
    }
}
