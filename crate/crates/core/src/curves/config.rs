//! Schottky configurations: two circles paired by `S` and two Jordan
//! curves through infinity paired by `T`, with a numerical verifier.
//!
//! The circles are the pair through 0 with centers `-1 + i beta` and
//! `1 - i beta`; `S` maps the first onto the second for every `beta`.
//! Classical cases use parallel lines. The NCF cases use the bisector
//! curve between the circle pair and its `T`-translate, which is a
//! piecewise linear graph over a direction transverse to `lambda`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group2p::{s_matrix, t_matrix};
use crate::moebius::{ComplexValue, MoebiusMatrix, Real, SpherePoint};
use crate::regions::predicates::{in_classical_ts_tol, in_ncf_tol, ClassicalStatus};

/// Residual and tangency tolerance.
pub const CONFIG_TOL: f64 = 1e-9;

/// How far the unbounded rays are sampled.
const RAY_EXTENT: f64 = 40.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConfigCase {
    ClassicalInterior,
    ClassicalBoundary,
    NcfBoundary,
    NcfInterior,
}

impl ConfigCase {
    pub fn name(self) -> &'static str {
        match self {
            ConfigCase::ClassicalInterior => "classical_interior",
            ConfigCase::ClassicalBoundary => "classical_boundary",
            ConfigCase::NcfBoundary => "ncf_boundary",
            ConfigCase::NcfInterior => "ncf_interior",
        }
    }
}

impl fmt::Display for ConfigCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConfigCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical_interior" => Ok(ConfigCase::ClassicalInterior),
            "classical_boundary" => Ok(ConfigCase::ClassicalBoundary),
            "ncf_boundary" => Ok(ConfigCase::NcfBoundary),
            "ncf_interior" => Ok(ConfigCase::NcfInterior),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// `Lambda` for the classical and NCF boundary cases; `Q = 2 lambda`
/// for the NCF interior case.
#[derive(Clone, Debug, PartialEq)]
pub enum ConfigInput {
    Lambda(ComplexValue),
    Q(ComplexValue),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Circle {
    pub center: [f64; 2],
    pub radius: f64,
}

impl Circle {
    fn c(&self) -> Complex64 {
        Complex64::new(self.center[0], self.center[1])
    }

    pub fn sample(&self, n: usize) -> Vec<Complex64> {
        (0..n).map(|k| self.c() + Complex64::from_polar(self.radius, 2.0 * PI * k as f64 / n as f64)).collect()
    }
}

fn dot(a: Complex64, b: Complex64) -> f64 {
    a.re * b.re + a.im * b.im
}

/// A curve through infinity given as the graph `t = g(s)` of a piecewise
/// linear function in the orthonormal frame `(w, v)`, with the end
/// segments extended to rays. The interior is `t > g(s)` when
/// `interior_above`, else `t < g(s)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JordanCurve {
    pub frame_w: [f64; 2],
    pub frame_v: [f64; 2],
    /// Breakpoints `(s, t)`, strictly increasing in `s`, at least two.
    pub graph: Vec<[f64; 2]>,
    pub interior_above: bool,
}

enum Piece {
    Segment(Complex64, Complex64),
    Ray(Complex64, Complex64),
}

impl Piece {
    fn foot(&self, p: Complex64) -> Complex64 {
        match *self {
            Piece::Segment(a, b) => {
                let d = b - a;
                let t = (dot(p - a, d) / d.norm_sqr()).clamp(0.0, 1.0);
                a + d * t
            }
            Piece::Ray(a, d) => a + d * dot(p - a, d).max(0.0),
        }
    }
}

impl JordanCurve {
    fn w(&self) -> Complex64 {
        Complex64::new(self.frame_w[0], self.frame_w[1])
    }

    fn v(&self) -> Complex64 {
        Complex64::new(self.frame_v[0], self.frame_v[1])
    }

    pub fn to_frame(&self, p: Complex64) -> (f64, f64) {
        (dot(p, self.w()), dot(p, self.v()))
    }

    pub fn from_frame(&self, s: f64, t: f64) -> Complex64 {
        self.w() * s + self.v() * t
    }

    fn end_slopes(&self) -> (f64, f64) {
        let g = &self.graph;
        let n = g.len();
        let slope = |a: [f64; 2], b: [f64; 2]| (b[1] - a[1]) / (b[0] - a[0]);
        (slope(g[0], g[1]), slope(g[n - 2], g[n - 1]))
    }

    /// `g(s)`, extended linearly past the end breakpoints.
    pub fn g(&self, s: f64) -> f64 {
        let g = &self.graph;
        let n = g.len();
        let k = if s <= g[0][0] {
            0
        } else if s >= g[n - 1][0] {
            n - 2
        } else {
            g.windows(2).position(|w| s <= w[1][0]).unwrap_or(n - 2)
        };
        let (a, b) = (g[k], g[k + 1]);
        a[1] + (b[1] - a[1]) * (s - a[0]) / (b[0] - a[0])
    }

    /// Signed offset `t - g(s)`, positive on the interior side.
    pub fn signed_offset(&self, p: Complex64) -> f64 {
        let (s, t) = self.to_frame(p);
        let d = t - self.g(s);
        if self.interior_above {
            d
        } else {
            -d
        }
    }

    pub fn vertices(&self) -> Vec<Complex64> {
        self.graph.iter().map(|p| self.from_frame(p[0], p[1])).collect()
    }

    /// Unit direction of the ray leaving the first vertex.
    pub fn head_direction(&self) -> Complex64 {
        let (m0, _) = self.end_slopes();
        let d = -(self.w() + self.v() * m0);
        d / d.norm()
    }

    /// Unit direction of the ray leaving the last vertex.
    pub fn tail_direction(&self) -> Complex64 {
        let (_, m1) = self.end_slopes();
        let d = self.w() + self.v() * m1;
        d / d.norm()
    }

    fn pieces(&self) -> Vec<Piece> {
        let vs = self.vertices();
        let mut out = vec![Piece::Ray(vs[0], self.head_direction())];
        for w in vs.windows(2) {
            out.push(Piece::Segment(w[0], w[1]));
        }
        out.push(Piece::Ray(vs[vs.len() - 1], self.tail_direction()));
        out
    }

    pub fn distance(&self, p: Complex64) -> f64 {
        self.pieces().iter().map(|pc| (pc.foot(p) - p).norm()).fold(f64::INFINITY, f64::min)
    }

    /// Points along the curve, the rays cut at `extent` from their base.
    pub fn sample(&self, per_piece: usize, extent: f64) -> Vec<Complex64> {
        let vs = self.vertices();
        let head = self.head_direction();
        let tail = self.tail_direction();
        let mut out = Vec::new();
        for k in (1..=per_piece).rev() {
            out.push(vs[0] + head * (extent * k as f64 / per_piece as f64));
        }
        for w in vs.windows(2) {
            for k in 0..per_piece {
                out.push(w[0] + (w[1] - w[0]) * (k as f64 / per_piece as f64));
            }
        }
        out.push(vs[vs.len() - 1]);
        for k in 1..=per_piece {
            out.push(vs[vs.len() - 1] + tail * (extent * k as f64 / per_piece as f64));
        }
        out
    }

    /// The same curve moved by `d`, interior side given explicitly.
    pub fn translate(&self, d: Complex64, interior_above: bool) -> JordanCurve {
        let (ds, dt) = self.to_frame(d);
        JordanCurve {
            frame_w: self.frame_w,
            frame_v: self.frame_v,
            graph: self.graph.iter().map(|p| [p[0] + ds, p[1] + dt]).collect(),
            interior_above,
        }
    }

    fn line(n: Complex64, offset: f64, interior_above: bool) -> JordanCurve {
        let w = n * Complex64::new(0.0, -1.0);
        JordanCurve {
            frame_w: [w.re, w.im],
            frame_v: [n.re, n.im],
            graph: vec![[-1.0, offset], [1.0, offset]],
            interior_above,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tangency {
    pub curves: [String; 2],
    /// `None` at infinity.
    pub point: Option<[f64; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchottkyConfiguration {
    pub case: ConfigCase,
    pub lambda: ComplexValue,
    /// The free point `q = 2 lambda` for the NCF interior case.
    pub q: Option<ComplexValue>,
    pub beta: f64,
    pub c1: Circle,
    pub c2: Circle,
    pub l1: JordanCurve,
    pub l2: JordanCurve,
    pub s_pairing: MoebiusMatrix,
    pub t_pairing: MoebiusMatrix,
    pub tangencies: Vec<Tangency>,
    pub recipe_extrapolated: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub pairing_ok: bool,
    pub pairing_trivial: bool,
    pub s_residual: f64,
    pub t_residual: f64,
    pub orientation_ok: bool,
    pub disjoint_ok: bool,
    /// Smallest signed clearance between curves; zero at tangencies.
    pub min_separation: f64,
    pub tangencies: Vec<Tangency>,
    pub tangency_count: usize,
    pub expected_tangencies: Option<usize>,
    pub ok: bool,
}

fn circles(beta: f64) -> (Circle, Circle) {
    let rho = (1.0 + beta * beta).sqrt();
    (Circle { center: [-1.0, beta], radius: rho }, Circle { center: [1.0, -beta], radius: rho })
}

fn is_plus_minus_two(l: Complex64) -> bool {
    (l - 2.0).norm() <= CONFIG_TOL || (l + 2.0).norm() <= CONFIG_TOL
}

fn classical(lambda: Complex64) -> (f64, JordanCurve, JordanCurve) {
    let (beta, n) = if is_plus_minus_two(lambda) {
        (0.0, Complex64::new(lambda.re.signum(), 0.0))
    } else {
        let beta = if lambda.im >= 0.0 { lambda.re / 2.0 } else { -lambda.re / 2.0 };
        let c = Complex64::new(-1.0, beta);
        let n = Complex64::i() * c / c.norm();
        (beta, if dot(lambda, n) < 0.0 { -n } else { n })
    };
    let g = dot(lambda, n);
    let l2 = JordanCurve::line(n, g, true);
    let l1 = l2.translate(-2.0 * lambda, false);
    (beta, l1, l2)
}

/// Bisector curve between `{c, -c}` and `{c + 2 lambda, -c + 2 lambda}`.
fn bisector(lambda: Complex64, beta: f64) -> Result<(JordanCurve, JordanCurve)> {
    let c = Complex64::new(-1.0, beta);
    let dirs = [lambda, lambda + c, lambda - c];
    let angles: Vec<f64> = dirs.iter().map(|d| (d / lambda).arg()).collect();
    let lo = angles.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = angles.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if hi - lo >= PI - 1e-9 || dirs.iter().any(|d| d.norm() < 1e-12) {
        return Err(Error::ConstructionFailed(format!("no transverse frame for lambda = {lambda}")));
    }
    let v = lambda / lambda.norm() * Complex64::from_polar(1.0, (hi + lo) / 2.0);
    let w = v * Complex64::new(0.0, -1.0);
    let a_pts = [c, -c];
    let b_pts = [c + 2.0 * lambda, -c + 2.0 * lambda];
    // t = alpha + slope s for each pair (a, b)
    let mut lines = [[(0.0, 0.0); 2]; 2];
    for (j, b) in b_pts.iter().enumerate() {
        for (i, a) in a_pts.iter().enumerate() {
            let d = b - a;
            let k = b.norm_sqr() - a.norm_sqr();
            lines[j][i] = (k / (2.0 * dot(d, v)), -dot(d, w) / dot(d, v));
        }
    }
    let h = |s: f64| {
        lines
            .iter()
            .map(|row| row.iter().map(|(al, m)| al + m * s).fold(f64::NEG_INFINITY, f64::max))
            .fold(f64::INFINITY, f64::min)
    };
    let flat: Vec<(f64, f64)> = lines.iter().flatten().cloned().collect();
    let mut cand = Vec::new();
    for i in 0..flat.len() {
        for j in i + 1..flat.len() {
            let (a1, m1) = flat[i];
            let (a2, m2) = flat[j];
            if (m1 - m2).abs() > 1e-12 {
                cand.push((a2 - a1) / (m1 - m2));
            }
        }
    }
    cand.sort_by(f64::total_cmp);
    cand.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    if cand.is_empty() {
        cand.push(0.0);
    }
    let mut ss = vec![cand[0] - 1.0];
    ss.extend(cand.iter().cloned());
    ss.push(cand[cand.len() - 1] + 1.0);
    let pts: Vec<[f64; 2]> = ss.iter().map(|&s| [s, h(s)]).collect();
    let mut graph: Vec<[f64; 2]> = vec![pts[0]];
    for k in 1..pts.len() - 1 {
        let (a, b, c) = (graph[graph.len() - 1], pts[k], pts[k + 1]);
        let cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
        if cross.abs() > 1e-12 {
            graph.push(b);
        }
    }
    graph.push(pts[pts.len() - 1]);
    let l2 = JordanCurve { frame_w: [w.re, w.im], frame_v: [v.re, v.im], graph, interior_above: true };
    let l1 = l2.translate(-2.0 * lambda, false);
    Ok((l1, l2))
}

/// Clearances `|lambda|^2 - rho^2`, `|lambda + c|^2 - rho^2`,
/// `|lambda - c|^2 - rho^2` between the circle pair and its translate.
pub fn ncf_slacks(lambda: Complex64, beta: f64) -> [f64; 3] {
    let c = Complex64::new(-1.0, beta);
    let r2 = c.norm_sqr();
    [lambda.norm_sqr() - r2, (lambda + c).norm_sqr() - r2, (lambda - c).norm_sqr() - r2]
}

fn min_slack(lambda: Complex64, beta: f64) -> f64 {
    ncf_slacks(lambda, beta).into_iter().fold(f64::INFINITY, f64::min)
}

/// `beta` maximizing the smallest clearance; the objective is concave.
fn best_beta(lambda: Complex64) -> f64 {
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let r = lambda.norm() + 2.0;
    let (mut a, mut b) = (-r, r);
    for _ in 0..200 {
        let x1 = b - phi * (b - a);
        let x2 = a + phi * (b - a);
        if min_slack(lambda, x1) < min_slack(lambda, x2) {
            a = x1;
        } else {
            b = x2;
        }
    }
    (a + b) / 2.0
}

fn wrong(case: ConfigCase, l: &ComplexValue) -> Error {
    Error::WrongRegion(format!("lambda = {l} is not valid for {case}"))
}

/// Build the configuration for `case` and verify it.
///
/// Errors with `WrongRegion` when the input is outside the case's region
/// and `ConstructionFailed` when the result does not verify.
pub fn build_configuration(case: ConfigCase, input: &ConfigInput) -> Result<SchottkyConfiguration> {
    let (lambda, q) = match (case, input) {
        (ConfigCase::NcfInterior, ConfigInput::Q(q)) => (q.scale(&Real::ratio(1, 2)), Some(q.clone())),
        (ConfigCase::NcfInterior, ConfigInput::Lambda(l)) => (l.clone(), Some(l.scale(&Real::int(2)))),
        (_, ConfigInput::Lambda(l)) => (l.clone(), None),
        (_, ConfigInput::Q(q)) => (q.scale(&Real::ratio(1, 2)), None),
    };
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let lf = lambda.to_complex64();
    let mut extrapolated = false;
    let (beta, l1, l2) = match case {
        ConfigCase::ClassicalInterior => {
            if in_classical_ts_tol(&lambda, 1e-12) != ClassicalStatus::Interior {
                return Err(wrong(case, &lambda));
            }
            classical(lf)
        }
        ConfigCase::ClassicalBoundary => {
            if in_classical_ts_tol(&lambda, CONFIG_TOL) != ClassicalStatus::Boundary {
                return Err(wrong(case, &lambda));
            }
            classical(lf)
        }
        ConfigCase::NcfBoundary => {
            if in_ncf_tol(&lambda, CONFIG_TOL).is_none() {
                return Err(wrong(case, &lambda));
            }
            let (u, v) = (lf.re.abs(), lf.im.abs());
            let on_arc = (u * u + v * v - 1.0).abs() <= CONFIG_TOL && v * v >= 3.0 * u * u - CONFIG_TOL;
            let on_k = (3f64.sqrt() * v + u - 2.0).abs() <= CONFIG_TOL && (0.5 - CONFIG_TOL..2.0).contains(&u);
            let b0 = if on_k {
                (2.0 * u - (u * u + v * v)) / (2.0 * v)
            } else if on_arc {
                extrapolated = true;
                0.0
            } else {
                return Err(wrong(case, &lambda));
            };
            let sign = if (lf.re < 0.0) != (lf.im < 0.0) { -1.0 } else { 1.0 };
            let beta = sign * b0;
            let (l1, l2) = bisector(lf, beta)?;
            (beta, l1, l2)
        }
        ConfigCase::NcfInterior => {
            if in_ncf_tol(&lambda, 0.0).is_none() {
                return Err(wrong(case, &lambda));
            }
            let beta = best_beta(lf);
            if min_slack(lf, beta) <= CONFIG_TOL {
                return Err(Error::ConstructionFailed(format!("no clearance at lambda = {lambda}")));
            }
            let (l1, l2) = bisector(lf, beta)?;
            (beta, l1, l2)
        }
    };
    let (c1, c2) = circles(beta);
    let mut cfg = SchottkyConfiguration {
        case,
        lambda: lambda.clone(),
        q,
        beta,
        c1,
        c2,
        l1,
        l2,
        s_pairing: s_matrix().with_label("S"),
        t_pairing: t_matrix(&lambda).with_label("T"),
        tangencies: Vec::new(),
        recipe_extrapolated: extrapolated,
    };
    let report = verify_configuration(&cfg);
    if !report.ok {
        return Err(Error::ConstructionFailed(format!(
            "{case} at lambda = {lambda}: pairing {} disjoint {} orientation {} tangencies {}",
            report.pairing_ok, report.disjoint_ok, report.orientation_ok, report.tangency_count
        )));
    }
    cfg.tangencies = report.tangencies;
    Ok(cfg)
}

/// Tangency count required for a case, when fixed.
pub fn expected_tangencies(case: ConfigCase, lambda: &ComplexValue) -> Option<usize> {
    match case {
        ConfigCase::ClassicalInterior | ConfigCase::NcfInterior => Some(2),
        ConfigCase::ClassicalBoundary => Some(if is_plus_minus_two(lambda.to_complex64()) { 4 } else { 6 }),
        ConfigCase::NcfBoundary => None,
    }
}

fn push_unique(list: &mut Vec<Tangency>, a: &str, b: &str, p: Complex64) {
    let dup = list.iter().any(|t| {
        t.curves[0] == a && t.curves[1] == b && t.point.is_some_and(|q| (Complex64::new(q[0], q[1]) - p).norm() < 1e-6)
    });
    if !dup {
        list.push(Tangency { curves: [a.to_string(), b.to_string()], point: Some([p.re, p.im]) });
    }
}

fn map_residual(m: &MoebiusMatrix, pts: &[Complex64], dist: impl Fn(Complex64) -> f64) -> f64 {
    pts.iter()
        .filter_map(|p| m.apply_c64(*p))
        .map(|q| if q.is_finite() { dist(q) } else { f64::INFINITY })
        .fold(0.0, f64::max)
}

/// Check pairings, orientation, disjoint interiors and tangencies.
pub fn verify_configuration(cfg: &SchottkyConfiguration) -> VerificationReport {
    let tol = CONFIG_TOL;
    let (c1, c2) = (&cfg.c1, &cfg.c2);
    let (l1, l2) = (&cfg.l1, &cfg.l2);

    let trivial = cfg.s_pairing.is_pm_identity(tol)
        || cfg.t_pairing.is_pm_identity(tol)
        || c1 == c2
        || l1.graph == l2.graph && l1.frame_v == l2.frame_v;

    let s_res = map_residual(&cfg.s_pairing, &c1.sample(256), |q| ((q - c2.c()).norm() - c2.radius).abs());
    let t_res = map_residual(&cfg.t_pairing, &l1.sample(32, RAY_EXTENT), |q| l2.distance(q));
    let pairing_ok = !trivial && s_res < tol && t_res < tol;

    // S sends infinity, outside C1, into C2; T sends a point outside L1 into L2.
    let s_inf = cfg.s_pairing.apply(&SpherePoint::Infinity);
    let s_orient = s_inf.finite().is_some_and(|z| (z.to_complex64() - c2.c()).norm() < c2.radius);
    let g0 = l1.graph[l1.graph.len() / 2];
    let off = if l1.interior_above { -0.5 } else { 0.5 };
    let probe = l1.from_frame(g0[0], g0[1] + off);
    let t_orient = cfg.t_pairing.apply_c64(probe).is_some_and(|z| l2.signed_offset(z) > 0.0);
    let orientation_ok = s_orient && t_orient;

    let mut tangencies = Vec::new();
    let mut min_sep = f64::INFINITY;

    // circles against each other
    let d = (c1.c() - c2.c()).norm() - c1.radius - c2.radius;
    min_sep = min_sep.min(d);
    if d.abs() <= tol {
        let u = (c2.c() - c1.c()) / (c2.c() - c1.c()).norm();
        push_unique(&mut tangencies, "C1", "C2", c1.c() + u * c1.radius);
    }
    // circles against curves: the center must lie outside with room
    for (cn, c) in [("C1", c1), ("C2", c2)] {
        for (ln, l) in [("L1", l1), ("L2", l2)] {
            let inside = l.signed_offset(c.c()) > 0.0;
            let sep = if inside { -l.distance(c.c()) - c.radius } else { l.distance(c.c()) - c.radius };
            min_sep = min_sep.min(sep);
            for pc in l.pieces() {
                let f = pc.foot(c.c());
                if ((f - c.c()).norm() - c.radius).abs() <= tol {
                    push_unique(&mut tangencies, cn, ln, f);
                }
            }
        }
    }
    // curves against each other: the upper graph must stay above
    let same_frame = l1.frame_w == l2.frame_w && l1.frame_v == l2.frame_v;
    let mut curves_ok = same_frame && l1.interior_above != l2.interior_above;
    if curves_ok {
        let (up, lo) = if l2.interior_above { (l2, l1) } else { (l1, l2) };
        let mut ss: Vec<f64> = up.graph.iter().chain(lo.graph.iter()).map(|p| p[0]).collect();
        ss.sort_by(f64::total_cmp);
        for s in ss {
            let gap = up.g(s) - lo.g(s);
            min_sep = min_sep.min(gap);
            if gap.abs() <= tol {
                push_unique(&mut tangencies, "L1", "L2", up.from_frame(s, up.g(s)));
            }
        }
        let (a0, a1) = up.end_slopes();
        let (b0, b1) = lo.end_slopes();
        if a1 < b1 - tol || a0 > b0 + tol {
            curves_ok = false;
        }
    }
    tangencies.push(Tangency { curves: ["L1".into(), "L2".into()], point: None });

    let disjoint_ok = curves_ok && min_sep >= -tol;
    let expected = expected_tangencies(cfg.case, &cfg.lambda);
    let count = tangencies.len();
    let ok = pairing_ok && orientation_ok && disjoint_ok && expected.is_none_or(|e| e == count);
    VerificationReport {
        pairing_ok,
        pairing_trivial: trivial,
        s_residual: s_res,
        t_residual: t_res,
        orientation_ok,
        disjoint_ok,
        min_separation: min_sep,
        tangencies,
        tangency_count: count,
        expected_tangencies: expected,
        ok,
    }
}

/// Free point `q` for a target `lambda` in the NCF interior; here the
/// parameterization is `q = 2 lambda`, so the search is exact.
pub fn ncf_interior_for_lambda(lambda: &ComplexValue) -> Result<SchottkyConfiguration> {
    let q = lambda.scale(&Real::int(2));
    let cfg = build_configuration(ConfigCase::NcfInterior, &ConfigInput::Q(q))?;
    if !cfg.lambda.approx_eq(lambda, 1e-6) {
        return Err(Error::ConstructionFailed(format!("lambda = {lambda} unreachable")));
    }
    Ok(cfg)
}
