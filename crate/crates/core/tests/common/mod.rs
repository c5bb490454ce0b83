#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use twopar::ComplexValue;

/// Gaussian integer matrices as `[[(re, im); 2]; 2]`, multiplied by hand.
pub type GMat = [[(i64, i64); 2]; 2];

pub fn gmul(a: &GMat, b: &GMat) -> GMat {
    let cm = |x: (i64, i64), y: (i64, i64)| (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
    let ca = |x: (i64, i64), y: (i64, i64)| (x.0 + y.0, x.1 + y.1);
    let mut out = [[(0, 0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = ca(cm(a[i][0], b[0][j]), cm(a[i][1], b[1][j]));
        }
    }
    out
}

pub fn gmat_to_cv(m: &GMat) -> [ComplexValue; 4] {
    let c = |x: (i64, i64)| ComplexValue::int(x.0, x.1);
    [c(m[0][0]), c(m[0][1]), c(m[1][0]), c(m[1][1])]
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Random nonzero Gaussian rational with small numerators and denominators.
pub fn gaussian_rational() -> impl Strategy<Value = ComplexValue> {
    (-40i64..=40, 1i64..=25, -40i64..=40, 1i64..=25)
        .prop_filter("nonzero", |(a, _, c, _)| *a != 0 || *c != 0)
        .prop_map(|(a, b, c, d)| ComplexValue::ratio(a, b, c, d))
}
