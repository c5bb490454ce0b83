//! Images of straight lines under `f(z) = -2 z^2`, and preimages.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use super::{check_samples, linspace, pullback, to_samples, Conic, CurveKind, PlaneCurve};
use crate::error::{Error, Result};
use crate::moebius::Real;

fn nonzero(c: &Real) -> Result<()> {
    if c.is_zero_tol(0.0) {
        Err(Error::ZeroOffset)
    } else {
        Ok(())
    }
}

fn image_curve(name: String, conic: Conic, pts: impl Iterator<Item = Complex64>) -> PlaneCurve {
    let img: Vec<Complex64> = pts.map(super::f_c64).collect();
    PlaneCurve::new(name, "images", CurveKind::Parabola, Some(conic), to_samples(&img))
}

/// Image of the segment of `x + y = c` between the axes:
/// an arc of `y = x^2 / (4 c^2) - c^2`.
pub fn image_of_diag_line(c: &Real, samples: usize) -> Result<PlaneCurve> {
    nonzero(c)?;
    check_samples(samples)?;
    let c2 = c.square();
    let conic =
        Conic::new(&Real::one() / &(&Real::int(4) * &c2), Real::zero(), Real::zero(), Real::zero(), Real::int(-1), -c2);
    let cf = c.to_f64();
    let xs = linspace(0.0, cf, samples);
    Ok(image_curve(format!("f(x+y={c})"), conic, xs.into_iter().map(|x| Complex64::new(x, cf - x))))
}

/// Image of `x = c`, `|y| <= |c|`: an arc of `x = y^2 / (8 c^2) - 2 c^2`.
pub fn image_of_vertical_line(c: &Real, samples: usize) -> Result<PlaneCurve> {
    nonzero(c)?;
    check_samples(samples)?;
    let c2 = c.square();
    let conic = Conic::new(
        Real::zero(),
        Real::zero(),
        &Real::one() / &(&Real::int(8) * &c2),
        Real::int(-1),
        Real::zero(),
        -(&Real::int(2) * &c2),
    );
    let cf = c.to_f64();
    let ys = linspace(-cf.abs(), cf.abs(), samples);
    Ok(image_curve(format!("f(x={c})"), conic, ys.into_iter().map(|y| Complex64::new(cf, y))))
}

/// Image of `y = c`, `|x| <= |c|`: an arc of `x = 2 c^2 - y^2 / (8 c^2)`.
pub fn image_of_horizontal_line(c: &Real, samples: usize) -> Result<PlaneCurve> {
    nonzero(c)?;
    check_samples(samples)?;
    let c2 = c.square();
    let conic = Conic::new(
        Real::zero(),
        Real::zero(),
        -(&Real::one() / &(&Real::int(8) * &c2)),
        Real::int(-1),
        Real::zero(),
        &Real::int(2) * &c2,
    );
    let cf = c.to_f64();
    let xs = linspace(-cf.abs(), cf.abs(), samples);
    Ok(image_curve(format!("f(y={c})"), conic, xs.into_iter().map(|x| Complex64::new(x, cf))))
}

/// Conic satisfied by `f^{-1}` of the line `y = m x + b`:
/// `2 m x^2 - 4 x y - 2 m y^2 - b = 0`.
pub fn line_preimage_conic(m: f64, b: f64) -> Conic {
    Conic::from_f64([2.0 * m, -4.0, -2.0 * m, 0.0, 0.0, -b])
}

fn line_preimage_branches(name: &str, m: f64, b: f64, x_range: (f64, f64), samples: usize) -> Vec<PlaneCurve> {
    let pts: Vec<Complex64> =
        linspace(x_range.0, x_range.1, samples).into_iter().map(|x| Complex64::new(x, m * x + b)).collect();
    let conic = line_preimage_conic(m, b);
    pullback(&pts)
        .iter()
        .enumerate()
        .map(|(k, br)| {
            PlaneCurve::new(
                format!("{name} branch {k}"),
                "preimages",
                CurveKind::HyperbolaBranch,
                Some(conic.clone()),
                to_samples(br),
            )
        })
        .collect()
}

/// Both branches of the preimage of the segment of `y = m x + b` over
/// `x_range`. Requires `m != 0` and `b != 0`.
pub fn preimage_of_line(m: f64, b: f64, x_range: (f64, f64), samples: usize) -> Result<Vec<PlaneCurve>> {
    if m == 0.0 || b == 0.0 || !m.is_finite() || !b.is_finite() {
        return Err(Error::DegenerateLine(format!("y = {m} x + {b}")));
    }
    check_samples(samples)?;
    Ok(line_preimage_branches(&format!("f^-1(y={m}x+{b})"), m, b, x_range, samples))
}

/// Preimage of the K-line segment from `e^{i pi/3}` to `2`.
pub fn kline_preimage(samples: usize) -> Result<Vec<PlaneCurve>> {
    check_samples(samples)?;
    let s3 = 3f64.sqrt();
    Ok(line_preimage_branches("f^-1(K)", -s3 / 3.0, 2.0 * s3 / 3.0, (0.5, 2.0), samples))
}

/// The hyperbola `4 (x + sqrt3/2)^2 - 7 y^2 = 3` proposed for the
/// K-line preimage. Kept for comparison against [`kline_preimage`].
pub fn proposed_kline_conic() -> Conic {
    let s3 = 3f64.sqrt();
    Conic::from_f64([4.0, 0.0, -7.0, 4.0 * s3, 0.0, 0.0])
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LineImage {
    /// Angle of the image line, `2 theta mod 2 pi`.
    pub theta: f64,
    /// Direction of the image ray, `2 theta + pi mod 2 pi`.
    pub ray: f64,
}

/// `f` sends the line through 0 at angle `theta` onto the ray at
/// `2 theta + pi`, which lies on the line at angle `2 theta`.
pub fn line_through_origin_image(theta: f64) -> LineImage {
    LineImage { theta: (2.0 * theta).rem_euclid(TAU), ray: (2.0 * theta + PI).rem_euclid(TAU) }
}
