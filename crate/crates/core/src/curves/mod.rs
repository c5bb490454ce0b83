//! Plane curves: images and preimages of lines under `f`, the Schottky
//! parabolas and their pullbacks, named region boundaries, Schottky
//! configurations, and CSV/JSON/SVG export.

pub mod boundaries;
pub mod config;
pub mod export;
pub mod lines;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::moebius::Real;

pub use boundaries::{boundary_nth, named_boundaries, nsdc_from_iteration, schottky_parabolas, CurveSet};
pub use config::{
    build_configuration, verify_configuration, ConfigCase, ConfigInput, SchottkyConfiguration, VerificationReport,
};
pub use lines::{
    image_of_diag_line, image_of_horizontal_line, image_of_vertical_line, kline_preimage, line_through_origin_image,
    preimage_of_line, proposed_kline_conic,
};

/// Default samples per arc.
pub const DEFAULT_SAMPLES: usize = 512;

/// Residual tolerance for samples against their defining equation.
pub const CURVE_TOL: f64 = 1e-9;

/// Cap on the pullback depth of [`boundary_nth`].
pub const BOUNDARY_DEPTH_CAP: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    Parabola,
    HyperbolaBranch,
    LineSegment,
    Circle,
    Arc,
    Polyline,
}

/// `xx x^2 + xy x y + yy y^2 + x x + y y + c = 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Conic {
    pub xx: Real,
    pub xy: Real,
    pub yy: Real,
    pub x: Real,
    pub y: Real,
    pub c: Real,
}

impl Conic {
    pub fn new(xx: Real, xy: Real, yy: Real, x: Real, y: Real, c: Real) -> Self {
        Conic { xx, xy, yy, x, y, c }
    }

    pub fn from_f64(v: [f64; 6]) -> Self {
        let r = |x: f64| Real::Float(x);
        Conic::new(r(v[0]), r(v[1]), r(v[2]), r(v[3]), r(v[4]), r(v[5]))
    }

    /// Circle `(x - a)^2 + (y - b)^2 = r^2`.
    pub fn circle(a: f64, b: f64, r: f64) -> Self {
        Conic::from_f64([1.0, 0.0, 1.0, -2.0 * a, -2.0 * b, a * a + b * b - r * r])
    }

    /// Line `a x + b y + c = 0`.
    pub fn line(a: Real, b: Real, c: Real) -> Self {
        Conic::new(Real::zero(), Real::zero(), Real::zero(), a, b, c)
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.xx.to_f64() * x * x
            + self.xy.to_f64() * x * y
            + self.yy.to_f64() * y * y
            + self.x.to_f64() * x
            + self.y.to_f64() * y
            + self.c.to_f64()
    }

    pub fn coefficients(&self) -> [f64; 6] {
        [self.xx.to_f64(), self.xy.to_f64(), self.yy.to_f64(), self.x.to_f64(), self.y.to_f64(), self.c.to_f64()]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaneCurve {
    pub name: String,
    pub layer: String,
    pub kind: CurveKind,
    pub conic: Option<Conic>,
    pub samples: Vec<[f64; 2]>,
}

impl PlaneCurve {
    pub fn new(
        name: impl Into<String>,
        layer: &str,
        kind: CurveKind,
        conic: Option<Conic>,
        samples: Vec<[f64; 2]>,
    ) -> Self {
        PlaneCurve { name: name.into(), layer: layer.to_string(), kind, conic, samples }
    }

    /// Largest `|conic(x, y)|` over the samples; zero without a conic.
    pub fn max_residual(&self) -> f64 {
        match &self.conic {
            None => 0.0,
            Some(c) => self.samples.iter().map(|p| c.eval(p[0], p[1]).abs()).fold(0.0, f64::max),
        }
    }

    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.samples.iter().map(|p| Complex64::new(p[0], p[1]))
    }

    pub fn first(&self) -> Option<Complex64> {
        self.samples.first().map(|p| Complex64::new(p[0], p[1]))
    }

    pub fn last(&self) -> Option<Complex64> {
        self.samples.last().map(|p| Complex64::new(p[0], p[1]))
    }
}

pub(crate) fn check_samples(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::BadSampleCount(n))
    } else {
        Ok(())
    }
}

/// `n` evenly spaced values from `a` to `b` inclusive.
pub(crate) fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| if k == n - 1 { b } else { a + (b - a) * (k as f64) / ((n - 1) as f64) }).collect()
}

pub(crate) fn f_c64(z: Complex64) -> Complex64 {
    -2.0 * z * z
}

/// Roots of `f(z) = w`, principal first.
pub(crate) fn preimages_c64(w: Complex64) -> [Complex64; 2] {
    let r = (-w / 2.0).sqrt();
    [r, -r]
}

/// Pull a polyline back through `f` with continuous branch tracking.
/// Returns the branch starting at the principal root, then the other.
pub(crate) fn pullback(points: &[Complex64]) -> [Vec<Complex64>; 2] {
    let mut a = Vec::with_capacity(points.len());
    let mut b = Vec::with_capacity(points.len());
    for (k, w) in points.iter().enumerate() {
        let [r, s] = preimages_c64(*w);
        if k == 0 {
            a.push(r);
            b.push(s);
        } else {
            let prev = a[k - 1];
            if (r - prev).norm() <= (s - prev).norm() {
                a.push(r);
                b.push(s);
            } else {
                a.push(s);
                b.push(r);
            }
        }
    }
    [a, b]
}

pub(crate) fn to_samples(points: &[Complex64]) -> Vec<[f64; 2]> {
    points.iter().map(|z| [z.re, z.im]).collect()
}
