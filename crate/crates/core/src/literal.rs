//! Parsing of parameter literals.
//!
//! Accepted forms: `3`, `-i`, `2i`, `1/2-1/2i`, `1/2 - 1/2 i`, `0.3+0.4i`,
//! `1e-3i`, and polar `r@theta` with `theta` in radians. Integers and
//! fractions stay exact; any decimal point, exponent or polar form gives
//! a floating value and a warning.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::moebius::ComplexValue;

#[derive(Clone, Debug, PartialEq)]
pub struct ParsedLiteral {
    pub value: ComplexValue,
    pub warnings: Vec<String>,
}

enum Num {
    Exact(BigRational),
    Float(f64),
}

fn bad(s: &str, why: &str) -> Error {
    Error::Parse(format!("{s:?}: {why}"))
}

fn parse_real(src: &str, s: &str) -> Result<Num> {
    if s.is_empty() {
        return Err(bad(src, "missing number"));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().map_err(|_| bad(src, "bad numerator"))?;
        let d: BigInt = d.parse().map_err(|_| bad(src, "bad denominator"))?;
        if d.is_zero() {
            return Err(bad(src, "zero denominator"));
        }
        return Ok(Num::Exact(BigRational::new(n, d)));
    }
    if let Ok(n) = s.parse::<BigInt>() {
        return Ok(Num::Exact(BigRational::from_integer(n)));
    }
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && !s.contains(|c: char| c.is_ascii_alphabetic() && c != 'e' && c != 'E') => {
            Ok(Num::Float(x))
        }
        _ => Err(bad(src, "bad number")),
    }
}

/// Split at top-level `+`/`-` signs, keeping exponent signs attached.
fn terms(s: &str) -> Vec<&str> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    for k in 1..b.len() {
        if (b[k] == b'+' || b[k] == b'-') && !matches!(b[k - 1], b'e' | b'E' | b'+' | b'-' | b'/') {
            out.push(&s[start..k]);
            start = k;
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_rect(src: &str, s: &str) -> Result<(Num, Num)> {
    let mut re: Option<Num> = None;
    let mut im: Option<Num> = None;
    for t in terms(s) {
        let (neg, body) = match t.as_bytes().first() {
            Some(b'-') => (true, &t[1..]),
            Some(b'+') => (false, &t[1..]),
            _ => (false, t),
        };
        let (is_im, body) = match body.strip_suffix('i') {
            Some(b) => (true, b.strip_suffix('*').unwrap_or(b)),
            None => (false, body),
        };
        let mut v = if is_im && body.is_empty() {
            Num::Exact(BigRational::from_integer(1.into()))
        } else {
            parse_real(src, body)?
        };
        if neg {
            v = match v {
                Num::Exact(q) => Num::Exact(-q),
                Num::Float(x) => Num::Float(-x),
            };
        }
        let slot = if is_im { &mut im } else { &mut re };
        if slot.is_some() {
            return Err(bad(src, "repeated component"));
        }
        *slot = Some(v);
    }
    let zero = || Num::Exact(BigRational::zero());
    Ok((re.unwrap_or_else(zero), im.unwrap_or_else(zero)))
}

fn to_f64(n: &Num) -> f64 {
    match n {
        Num::Exact(q) => crate::moebius::scalar::rat_to_f64(q),
        Num::Float(x) => *x,
    }
}

/// Parse a parameter literal.
pub fn parse_lambda(src: &str) -> Result<ParsedLiteral> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad(src, "empty"));
    }
    if let Some((r, t)) = s.split_once('@') {
        let r = to_f64(&parse_real(src, r)?);
        let t = to_f64(&parse_real(src, t)?);
        let z = num_complex::Complex64::from_polar(r, t);
        return Ok(ParsedLiteral {
            value: ComplexValue::float(z.re, z.im),
            warnings: vec![format!("polar literal {src:?} parsed as floating")],
        });
    }
    let (re, im) = parse_rect(src, &s)?;
    match (re, im) {
        (Num::Exact(a), Num::Exact(b)) => Ok(ParsedLiteral { value: ComplexValue::exact(a, b), warnings: vec![] }),
        (a, b) => Ok(ParsedLiteral {
            value: ComplexValue::float(to_f64(&a), to_f64(&b)),
            warnings: vec![format!("decimal literal {src:?} parsed as floating")],
        }),
    }
}
