//! The Schottky parabolas, their pullbacks, and the named boundaries.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::{check_samples, linspace, pullback, to_samples, Conic, CurveKind, PlaneCurve, BOUNDARY_DEPTH_CAP};
use crate::dynamics::t_radius;
use crate::error::{Error, Result};
use crate::moebius::Real;

pub const LAYER_JORGENSEN: &str = "jorgensen";
pub const LAYER_SCHOTTKY: &str = "schottky";
pub const LAYER_NSDC: &str = "nsdc";
pub const LAYER_NCF: &str = "ncf";
pub const LAYER_TESS: &str = "tess_circles";
pub const LAYER_PREIMAGES: &str = "preimages_n";
pub const LAYER_D2: &str = "d2_square";

/// Fixed layer order used by the exporters.
pub const LAYERS: [&str; 7] =
    [LAYER_JORGENSEN, LAYER_SCHOTTKY, LAYER_NSDC, LAYER_NCF, LAYER_TESS, LAYER_PREIMAGES, LAYER_D2];

#[derive(Clone, Debug, Default, Serialize)]
pub struct CurveSet {
    pub curves: Vec<PlaneCurve>,
}

impl CurveSet {
    pub fn layer<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a PlaneCurve> + 'a {
        self.curves.iter().filter(move |c| c.layer == name)
    }

    pub fn extend(&mut self, curves: impl IntoIterator<Item = PlaneCurve>) {
        self.curves.extend(curves);
    }
}

fn parabola_arc(upper: bool, samples: usize) -> PlaneCurve {
    let sign = if upper { 1.0 } else { -1.0 };
    let pts: Vec<[f64; 2]> =
        linspace(-2.0, 2.0, samples).into_iter().map(|x| [x, sign * (1.0 - x * x / 4.0)]).collect();
    // x^2/4 +- y - 1 = 0
    let conic = Conic::new(
        Real::ratio(1, 4),
        Real::zero(),
        Real::zero(),
        Real::zero(),
        Real::int(if upper { 1 } else { -1 }),
        Real::int(-1),
    );
    let name = if upper { "P upper" } else { "P lower" };
    PlaneCurve::new(name, LAYER_SCHOTTKY, CurveKind::Parabola, Some(conic), pts)
}

/// The arcs `y = +-(1 - x^2/4)`, `-2 <= x <= 2`, upper first.
pub fn schottky_parabolas(samples: usize) -> Result<[PlaneCurve; 2]> {
    check_samples(samples)?;
    Ok([parabola_arc(true, samples), parabola_arc(false, samples)])
}

fn segment(name: String, layer: &str, a: [f64; 2], b: [f64; 2], conic: Conic, samples: usize) -> PlaneCurve {
    let pts = linspace(0.0, 1.0, samples)
        .into_iter()
        .map(|t| if t == 1.0 { b } else { [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])] })
        .collect();
    PlaneCurve::new(name, layer, CurveKind::LineSegment, Some(conic), pts)
}

/// `|x| + |y| = r` as four segments.
fn diamond(r: i64, layer: &str, samples: usize) -> Vec<PlaneCurve> {
    let rf = r as f64;
    let v = [[rf, 0.0], [0.0, rf], [-rf, 0.0], [0.0, -rf]];
    // sx x + sy y - r = 0 on each side
    let signs = [(1, 1), (-1, 1), (-1, -1), (1, -1)];
    (0..4)
        .map(|k| {
            let (sx, sy) = signs[k];
            let conic = Conic::line(Real::int(sx), Real::int(sy), Real::int(-r));
            segment(format!("|x|+|y|={r} side {k}"), layer, v[k], v[(k + 1) % 4], conic, samples)
        })
        .collect()
}

/// The quadric `-2 (x + s y)^2 + 4 y^2 = rhs` matching a second pullback
/// branch, as `(s, rhs)`.
fn corner_quadrics() -> [(i64, i64); 4] {
    [(1, 1), (1, -1), (-1, 1), (-1, -1)]
}

fn corner_conic(s: i64, rhs: i64) -> Conic {
    Conic::new(Real::int(-2), Real::int(-4 * s), Real::int(2), Real::zero(), Real::zero(), Real::int(-rhs))
}

/// `f^{-n}` of the Schottky parabolas: `2^{n+1}` polylines.
///
/// `n = 0` gives the parabolas and `n = 1` the exact diamond
/// `|x| + |y| = 1`. Deeper levels pull the parabola samples back through
/// `f` with continuous branch tracking; each polyline is named by its
/// parent arc and branch sequence. At `n = 2` each branch carries the
/// quadric it satisfies.
pub fn boundary_nth(n: u32, samples: usize) -> Result<Vec<PlaneCurve>> {
    check_samples(samples)?;
    if n > BOUNDARY_DEPTH_CAP {
        return Err(Error::DepthExceeded { requested: n, cap: BOUNDARY_DEPTH_CAP });
    }
    match n {
        0 => return Ok(schottky_parabolas(samples)?.to_vec()),
        1 => return Ok(diamond(1, LAYER_PREIMAGES, samples)),
        _ => {}
    }
    let mut level: Vec<(String, Vec<Complex64>)> = schottky_parabolas(samples)?
        .iter()
        .map(|c| (if c.name.ends_with("upper") { "U" } else { "L" }.to_string(), c.points().collect()))
        .collect();
    for _ in 0..n {
        let mut next = Vec::with_capacity(level.len() * 2);
        for (code, pts) in &level {
            let [a, b] = pullback(pts);
            next.push((format!("{code}+"), a));
            next.push((format!("{code}-"), b));
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|(code, pts)| {
            let samples = to_samples(&pts);
            let conic = if n == 2 { Some(best_corner_conic(&samples)) } else { None };
            let kind = if n == 2 { CurveKind::HyperbolaBranch } else { CurveKind::Polyline };
            PlaneCurve::new(format!("f^-{n}(P) {code}"), LAYER_PREIMAGES, kind, conic, samples)
        })
        .collect())
}

fn best_corner_conic(samples: &[[f64; 2]]) -> Conic {
    let mid = samples[samples.len() / 2];
    corner_quadrics()
        .iter()
        .map(|&(s, r)| corner_conic(s, r))
        .min_by(|a, b| a.eval(mid[0], mid[1]).abs().total_cmp(&b.eval(mid[0], mid[1]).abs()))
        .expect("four quadrics")
}

fn circle(name: String, layer: &str, r: f64, samples: usize) -> PlaneCurve {
    let pts = (0..samples)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / samples as f64;
            [r * t.cos(), r * t.sin()]
        })
        .collect();
    PlaneCurve::new(name, layer, CurveKind::Circle, Some(Conic::circle(0.0, 0.0, r)), pts)
}

/// `y^2 = 16 - 8 x` for `0 <= x <= 2` (`right`) or `y^2 = 16 + 8 x` for
/// `-2 <= x <= 0`, sampled by `y`.
fn nsdc_arc(right: bool, samples: usize) -> PlaneCurve {
    let s = if right { 1.0 } else { -1.0 };
    let pts = linspace(-4.0, 4.0, samples).into_iter().map(|y| [s * (16.0 - y * y) / 8.0, y]).collect();
    let conic = Conic::new(
        Real::zero(),
        Real::zero(),
        Real::one(),
        Real::int(if right { 8 } else { -8 }),
        Real::zero(),
        Real::int(-16),
    );
    let name = if right { "nsdc right" } else { "nsdc left" };
    PlaneCurve::new(name, LAYER_NSDC, CurveKind::Parabola, Some(conic), pts)
}

fn reflect(p: [f64; 2], neg_x: bool, neg_y: bool) -> [f64; 2] {
    [if neg_x { -p[0] } else { p[0] }, if neg_y { -p[1] } else { p[1] }]
}

const REFLECTIONS: [(bool, bool, &str); 4] =
    [(false, false, ""), (true, true, "-"), (false, true, "conj "), (true, false, "-conj ")];

fn ncf_curves(samples: usize) -> Vec<PlaneCurve> {
    let s3 = 3f64.sqrt();
    let mut out = Vec::new();
    for (nx, ny, tag) in REFLECTIONS {
        // K0: from e^{i pi/3} to 2 on sqrt3 y + x - 2 = 0
        let a = reflect([0.5, s3 / 2.0], nx, ny);
        let b = reflect([2.0, 0.0], nx, ny);
        let kx = if nx { -1.0 } else { 1.0 };
        let ky = if ny { -s3 } else { s3 };
        let conic = Conic::from_f64([0.0, 0.0, 0.0, kx, ky, -2.0]);
        out.push(segment(format!("{tag}K0"), LAYER_NCF, a, b, conic, samples));
        let arc =
            linspace(PI / 3.0, PI / 2.0, samples).into_iter().map(|t| reflect([t.cos(), t.sin()], nx, ny)).collect();
        out.push(PlaneCurve::new(
            format!("{tag}unit arc"),
            LAYER_NCF,
            CurveKind::Arc,
            Some(Conic::circle(0.0, 0.0, 1.0)),
            arc,
        ));
    }
    for mut c in [parabola_arc(true, samples), parabola_arc(false, samples)] {
        c.layer = LAYER_NCF.to_string();
        c.name = format!("ncf outer {}", if c.name.ends_with("upper") { "upper" } else { "lower" });
        out.push(c);
    }
    out
}

/// Every named boundary, tagged by layer: the Jorgensen circle, the
/// Schottky parabolas, the NSDC parabola arcs, the NCF boundary copies,
/// the circles `|z| = t_n` for `-1 <= n <= 6`, and `|x| + |y| = 2`.
pub fn named_boundaries(samples: usize) -> Result<CurveSet> {
    check_samples(samples)?;
    let mut set = CurveSet::default();
    set.curves.push(circle("|z|=1/2".into(), LAYER_JORGENSEN, 0.5, samples));
    set.extend(schottky_parabolas(samples)?);
    set.curves.push(nsdc_arc(true, samples));
    set.curves.push(nsdc_arc(false, samples));
    set.extend(ncf_curves(samples));
    for n in -1..=6 {
        let r = t_radius(n)?.to_f64();
        set.curves.push(circle(format!("|z|=t_{n}"), LAYER_TESS, r, samples));
    }
    set.extend(diamond(2, LAYER_D2, samples));
    Ok(set)
}

/// The NSDC arcs rebuilt as `-4 f` of the sides of the square with
/// corners `(+-1/2, +-1/2)`: the right side gives `y^2 = 16 - 8 x` and
/// the top side `y^2 = 16 + 8 x`.
pub fn nsdc_from_iteration(samples: usize) -> Result<[PlaneCurve; 2]> {
    check_samples(samples)?;
    let map = |z: Complex64| -4.0 * super::f_c64(z);
    let ts = linspace(-0.5, 0.5, samples);
    let right: Vec<Complex64> = ts.iter().map(|&y| map(Complex64::new(0.5, y))).collect();
    let top: Vec<Complex64> = ts.iter().map(|&x| map(Complex64::new(x, 0.5))).collect();
    let mut a = nsdc_arc(true, 2);
    a.samples = to_samples(&right);
    a.name = "-4 f(x=1/2)".into();
    let mut b = nsdc_arc(false, 2);
    b.samples = to_samples(&top);
    b.name = "-4 f(y=1/2)".into();
    Ok([a, b])
}
