//! CSV, JSON and SVG output. All writers are deterministic: fixed layer
//! order, fixed number formatting, no timestamps.

use std::fmt::Write as _;

use serde::Serialize;

use super::boundaries::{
    boundary_nth, named_boundaries, CurveSet, LAYERS, LAYER_PREIMAGES, LAYER_SCHOTTKY, LAYER_TESS,
};
use super::config::SchottkyConfiguration;
use super::{CurveKind, PlaneCurve};
use crate::error::Result;
use crate::regions::predicates::SCHEMA_VERSION;

/// Six decimals, with `-0` folded into `0`.
pub fn fmt_num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn kind_name(k: CurveKind) -> &'static str {
    match k {
        CurveKind::Parabola => "parabola",
        CurveKind::HyperbolaBranch => "hyperbola_branch",
        CurveKind::LineSegment => "line_segment",
        CurveKind::Circle => "circle",
        CurveKind::Arc => "arc",
        CurveKind::Polyline => "polyline",
    }
}

/// One row per sample: `curve_id,kind,x,y`.
pub fn curves_to_csv(curves: &[PlaneCurve]) -> String {
    let mut out = String::from("curve_id,kind,x,y\n");
    for c in curves {
        let id = csv_field(&c.name);
        for p in &c.samples {
            let _ = writeln!(out, "{id},{},{},{}", kind_name(c.kind), fmt_num(p[0]), fmt_num(p[1]));
        }
    }
    out
}

#[derive(Serialize)]
struct CurveMeta<'a> {
    name: &'a str,
    layer: &'a str,
    kind: CurveKind,
    conic: Option<&'a super::Conic>,
    max_residual: f64,
    sample_count: usize,
    samples: Option<&'a [[f64; 2]]>,
}

#[derive(Serialize)]
struct CurvesDoc<'a> {
    schema_version: u32,
    curves: Vec<CurveMeta<'a>>,
}

/// Curve metadata and coefficients; samples included on request.
pub fn curves_to_json(curves: &[PlaneCurve], with_samples: bool) -> String {
    let doc = CurvesDoc {
        schema_version: SCHEMA_VERSION,
        curves: curves
            .iter()
            .map(|c| CurveMeta {
                name: &c.name,
                layer: &c.layer,
                kind: c.kind,
                conic: c.conic.as_ref(),
                max_residual: c.max_residual(),
                sample_count: c.samples.len(),
                samples: with_samples.then_some(c.samples.as_slice()),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("curves serialize")
}

/// Visible window `[x0, x1] x [y0, y1]` and output width in pixels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
    pub width: u32,
}

impl Viewport {
    pub fn square(r: f64, width: u32) -> Self {
        Viewport { x0: -r, x1: r, y0: -r, y1: r, width }
    }

    fn contains(&self, p: [f64; 2]) -> bool {
        p[0] >= self.x0 && p[0] <= self.x1 && p[1] >= self.y0 && p[1] <= self.y1
    }

    fn height(&self) -> u32 {
        ((self.width as f64) * (self.y1 - self.y0) / (self.x1 - self.x0)).round() as u32
    }
}

fn stroke(layer: &str) -> &'static str {
    match layer {
        "jorgensen" => "#d62728",
        "schottky" => "#1f77b4",
        "nsdc" => "#2ca02c",
        "ncf" => "#9467bd",
        "tess_circles" => "#7f7f7f",
        "preimages_n" => "#ff7f0e",
        "d2_square" => "#8c564b",
        _ => "#000000",
    }
}

/// Split a polyline into runs that stay inside the viewport.
fn clipped_runs(samples: &[[f64; 2]], vp: &Viewport) -> Vec<Vec<[f64; 2]>> {
    let mut runs = Vec::new();
    let mut cur: Vec<[f64; 2]> = Vec::new();
    for p in samples {
        if vp.contains(*p) {
            cur.push(*p);
        } else if !cur.is_empty() {
            runs.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        runs.push(cur);
    }
    runs.retain(|r| r.len() >= 2);
    runs
}

fn polyline(out: &mut String, pts: &[[f64; 2]]) {
    out.push_str("<polyline points=\"");
    for (k, p) in pts.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{},{}", fmt_num(p[0]), fmt_num(-p[1]));
    }
    out.push_str("\"/>\n");
}

fn curve_svg(out: &mut String, c: &PlaneCurve, vp: &Viewport) {
    let mut samples = c.samples.clone();
    if c.kind == CurveKind::Circle {
        if let Some(f) = samples.first().copied() {
            samples.push(f);
        }
    }
    for run in clipped_runs(&samples, vp) {
        polyline(out, &run);
    }
}

/// A named group of curves, possibly with nested groups.
pub struct SvgGroup<'a> {
    pub id: String,
    pub style_layer: &'a str,
    pub curves: Vec<&'a PlaneCurve>,
    pub children: Vec<SvgGroup<'a>>,
}

fn group_svg(out: &mut String, g: &SvgGroup<'_>, vp: &Viewport, stroke_w: f64) {
    let _ = writeln!(
        out,
        "<g id=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\">",
        g.id,
        stroke(g.style_layer),
        fmt_num(stroke_w)
    );
    for c in &g.curves {
        curve_svg(out, c, vp);
    }
    for ch in &g.children {
        group_svg(out, ch, vp, stroke_w);
    }
    out.push_str("</g>\n");
}

fn svg_open(vp: &Viewport) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
        vp.width,
        vp.height(),
        fmt_num(vp.x0),
        fmt_num(-vp.y1),
        fmt_num(vp.x1 - vp.x0),
        fmt_num(vp.y1 - vp.y0)
    )
}

fn stroke_width(vp: &Viewport) -> f64 {
    (vp.x1 - vp.x0) / vp.width as f64 * 1.5
}

pub fn svg_document(groups: &[SvgGroup<'_>], vp: &Viewport) -> String {
    let mut out = svg_open(vp);
    let sw = stroke_width(vp);
    for g in groups {
        group_svg(&mut out, g, vp, sw);
    }
    out.push_str("</svg>\n");
    out
}

/// One group per non-empty layer, in the fixed layer order.
pub fn curves_to_svg(set: &CurveSet, vp: &Viewport) -> String {
    let groups: Vec<SvgGroup<'_>> = LAYERS
        .iter()
        .filter_map(|&layer| {
            let curves: Vec<&PlaneCurve> = set.layer(layer).collect();
            (!curves.is_empty()).then(|| SvgGroup {
                id: layer.to_string(),
                style_layer: layer,
                curves,
                children: vec![],
            })
        })
        .collect();
    svg_document(&groups, vp)
}

/// Region overview: Jorgensen circle, Schottky parabolas, NSDC and NCF
/// boundaries.
pub fn figure_regions_svg(samples: usize) -> Result<String> {
    let all = named_boundaries(samples)?;
    let keep = ["jorgensen", "schottky", "nsdc", "ncf"];
    let set = CurveSet { curves: all.curves.into_iter().filter(|c| keep.contains(&c.layer.as_str())).collect() };
    Ok(curves_to_svg(&set, &Viewport::square(4.5, 800)))
}

/// Tessellation: the parabolas, the circles `|z| = t_n`, and the
/// pullbacks `f^{-n}` for `1 <= n <= depth`, one nested group per level.
pub fn figure_tessellation_svg(depth: u32, samples: usize) -> Result<String> {
    let all = named_boundaries(samples)?;
    let levels: Vec<Vec<PlaneCurve>> = (1..=depth).map(|n| boundary_nth(n, samples)).collect::<Result<_>>()?;
    let schottky: Vec<&PlaneCurve> = all.layer(LAYER_SCHOTTKY).collect();
    let tess: Vec<&PlaneCurve> = all.layer(LAYER_TESS).collect();
    let children = levels
        .iter()
        .enumerate()
        .map(|(k, lv)| SvgGroup {
            id: format!("preimages_{}", k + 1),
            style_layer: LAYER_PREIMAGES,
            curves: lv.iter().collect(),
            children: vec![],
        })
        .collect();
    let groups = vec![
        SvgGroup { id: LAYER_SCHOTTKY.into(), style_layer: LAYER_SCHOTTKY, curves: schottky, children: vec![] },
        SvgGroup { id: LAYER_TESS.into(), style_layer: LAYER_TESS, curves: tess, children: vec![] },
        SvgGroup { id: LAYER_PREIMAGES.into(), style_layer: LAYER_PREIMAGES, curves: vec![], children },
    ];
    Ok(svg_document(&groups, &Viewport::square(2.5, 800)))
}

/// Circles, clipped Jordan curves and tangency marks.
pub fn configuration_to_svg(cfg: &SchottkyConfiguration, vp: &Viewport) -> String {
    let mut out = svg_open(vp);
    let sw = stroke_width(vp);
    let extent = 2.0 * ((vp.x1 - vp.x0).abs() + (vp.y1 - vp.y0).abs());
    let _ = writeln!(out, "<g id=\"circles\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"{}\">", fmt_num(sw));
    for (id, c) in [("C1", &cfg.c1), ("C2", &cfg.c2)] {
        let _ = writeln!(
            out,
            "<circle id=\"{id}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            fmt_num(c.center[0]),
            fmt_num(-c.center[1]),
            fmt_num(c.radius)
        );
    }
    out.push_str("</g>\n");
    let _ = writeln!(out, "<g id=\"curves\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"{}\">", fmt_num(sw));
    for l in [&cfg.l1, &cfg.l2] {
        let pts: Vec<[f64; 2]> = l.sample(64, extent).iter().map(|z| [z.re, z.im]).collect();
        for run in clipped_runs(&pts, vp) {
            polyline(&mut out, &run);
        }
    }
    out.push_str("</g>\n");
    let _ = writeln!(out, "<g id=\"tangencies\" fill=\"#000000\" stroke=\"none\">");
    for t in &cfg.tangencies {
        if let Some(p) = t.point {
            if vp.contains(p) {
                let _ = writeln!(
                    out,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                    fmt_num(p[0]),
                    fmt_num(-p[1]),
                    fmt_num(3.0 * sw)
                );
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}
