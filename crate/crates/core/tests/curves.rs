use proptest::prelude::*;
use twopar::curves::config::{verify_configuration, Circle};
use twopar::curves::export::{
    curves_to_csv, curves_to_json, curves_to_svg, figure_regions_svg, figure_tessellation_svg, Viewport,
};
use twopar::curves::*;
use twopar::dynamics::t_radius;
use twopar::moebius::MoebiusMatrix;
use twopar::{ComplexValue, Error, Real};

/// Oracle: `f` in plain floats.
fn f(x: f64, y: f64) -> (f64, f64) {
    (-2.0 * (x * x - y * y), -4.0 * x * y)
}

fn fn_iter(mut p: (f64, f64), n: u32) -> (f64, f64) {
    for _ in 0..n {
        p = f(p.0, p.1);
    }
    p
}

/// Oracle: distance-like residual to the Schottky parabolas.
fn p_residual(x: f64, y: f64) -> f64 {
    (y.abs() - (1.0 - x * x / 4.0)).abs()
}

#[test]
fn diag_line_images() {
    let c = image_of_diag_line(&Real::one(), 64).unwrap();
    assert!(c.max_residual() < 1e-9);
    let (x, y) = f(0.3, 0.7);
    assert!((y - (-1.0 + x * x / 4.0)).abs() < 1e-12);
    assert!(c.conic.as_ref().unwrap().eval(x, y).abs() < 1e-12);
    let m = image_of_diag_line(&Real::int(-1), 64).unwrap();
    assert_eq!(c.conic, m.conic);
    for p in c.samples.iter().chain(m.samples.iter()) {
        assert!(p_residual(p[0], p[1]) < 1e-12);
    }
    assert!(matches!(image_of_diag_line(&Real::zero(), 8), Err(Error::ZeroOffset)));
}

#[test]
fn vertical_and_horizontal_images() {
    let v = image_of_vertical_line(&Real::ratio(1, 2), 33).unwrap();
    let k = v.conic.clone().unwrap();
    assert_eq!(k.yy, Real::ratio(1, 2));
    assert_eq!(k.c, Real::ratio(-1, 2));
    assert!(v.max_residual() < 1e-12);
    // vertex at (-2 c^2, 0)
    assert!(v.samples.iter().any(|p| (p[0] + 0.5).abs() < 1e-15 && p[1].abs() < 1e-15));
    let h = image_of_horizontal_line(&Real::one(), 33).unwrap();
    assert!(h.conic.as_ref().unwrap().eval(2.0, 0.0).abs() < 1e-15);
    assert!(h.max_residual() < 1e-12);
    assert!(matches!(image_of_horizontal_line(&Real::zero(), 8), Err(Error::ZeroOffset)));
}

#[test]
fn line_preimages_map_back() {
    for (m, b) in [(0.5, 1.0), (-2.0, 0.3), (3.0, -1.5)] {
        let br = preimage_of_line(m, b, (-3.0, 3.0), 200).unwrap();
        assert_eq!(br.len(), 2);
        for c in &br {
            assert!(c.max_residual() < 1e-9);
            for p in &c.samples {
                let (x, y) = f(p[0], p[1]);
                assert!((y - (m * x + b)).abs() < 1e-9);
            }
        }
    }
    assert!(matches!(preimage_of_line(0.0, 1.0, (0.0, 1.0), 8), Err(Error::DegenerateLine(_))));
    assert!(matches!(preimage_of_line(1.0, 0.0, (0.0, 1.0), 8), Err(Error::DegenerateLine(_))));
}

#[test]
fn kline_preimage_hits_the_segment() {
    let s3 = 3f64.sqrt();
    for c in kline_preimage(257).unwrap() {
        assert!(c.max_residual() < 1e-9);
        for p in &c.samples {
            let (x, y) = f(p[0], p[1]);
            assert!((3.0 * y + s3 * x - 2.0 * s3).abs() < 1e-9);
            assert!((0.5 - 1e-12..=2.0 + 1e-12).contains(&x));
        }
    }
}

#[test]
fn origin_lines() {
    use std::f64::consts::PI;
    assert_eq!(line_through_origin_image(0.0).theta, 0.0);
    assert!((line_through_origin_image(PI / 6.0).theta - PI / 3.0).abs() < 1e-15);
    assert!((line_through_origin_image(PI / 3.0).theta - 2.0 * PI / 3.0).abs() < 1e-15);
    // the ray at 2 theta + pi carries the image of r e^{i theta}
    let th: f64 = 0.4;
    let (x, y) = f(th.cos(), th.sin());
    let ray = line_through_origin_image(th).ray;
    assert!((y.atan2(x).rem_euclid(2.0 * PI) - ray).abs() < 1e-12);
}

#[test]
fn parabola_examples() {
    let [u, l] = schottky_parabolas(5).unwrap();
    assert_eq!(u.samples, vec![[-2.0, 0.0], [-1.0, 0.75], [0.0, 1.0], [1.0, 0.75], [2.0, 0.0]]);
    assert_eq!(l.samples[2], [0.0, -1.0]);
    assert_eq!(l.samples[3], [1.0, -0.75]);
    assert_eq!(u.max_residual(), 0.0);
    assert!(matches!(schottky_parabolas(1), Err(Error::BadSampleCount(1))));
}

#[test]
fn diamond_is_first_pullback() {
    let d = boundary_nth(1, 3).unwrap();
    assert_eq!(d.len(), 4);
    let pts: Vec<[f64; 2]> = d.iter().flat_map(|c| c.samples.clone()).collect();
    for v in [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0], [0.5, -0.5]] {
        assert!(pts.contains(&v), "{v:?}");
    }
    for p in &pts {
        let (x, y) = f(p[0], p[1]);
        assert!(p_residual(x, y) < 1e-12);
    }
    assert_eq!(boundary_nth(0, 9).unwrap().len(), 2);
}

#[test]
fn second_pullback_eight_hyperbolas() {
    let curves = boundary_nth(2, 512).unwrap();
    assert_eq!(curves.len(), 8);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for c in &curves {
        assert_eq!(c.kind, CurveKind::HyperbolaBranch);
        for p in &c.samples {
            let (x, y) = (p[0], p[1]);
            let best = [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)]
                .iter()
                .map(|(s, r)| (-2.0 * (x + s * y).powi(2) + 4.0 * y * y - r).abs())
                .fold(f64::INFINITY, f64::min);
            assert!(best < 1e-9);
            let (fx, fy) = fn_iter((x, y), 2);
            assert!(p_residual(fx, fy) < 1e-9);
        }
        assert!(c.max_residual() < 1e-9);
        for e in [c.first().unwrap(), c.last().unwrap()] {
            assert!((e.norm() - h).abs() < 1e-9);
        }
    }
}

#[test]
fn deeper_pullbacks() {
    for n in 3..=5u32 {
        let curves = boundary_nth(n, 128).unwrap();
        assert_eq!(curves.len(), 1 << (n + 1));
        let t = t_radius(n as i64 - 1).unwrap().to_f64();
        for c in &curves {
            for e in [c.first().unwrap(), c.last().unwrap()] {
                assert!((e.norm() - t).abs() < 1e-9, "n = {n}");
            }
            for p in c.samples.iter().step_by(7) {
                let (fx, fy) = fn_iter((p[0], p[1]), n);
                assert!(p_residual(fx, fy) < 1e-9);
            }
        }
    }
    assert!(matches!(boundary_nth(11, 8), Err(Error::DepthExceeded { requested: 11, .. })));
}

#[test]
fn named_boundary_examples() {
    let set = named_boundaries(257).unwrap();
    for c in &set.curves {
        assert!(c.max_residual() < 1e-9, "{}", c.name);
    }
    let nsdc: Vec<_> = set.layer("nsdc").collect();
    assert_eq!(nsdc.len(), 2);
    for c in &nsdc {
        assert!(c.samples.iter().any(|p| p[0].abs() < 1e-15 && (p[1].abs() - 4.0).abs() < 1e-15));
    }
    let k0 = set.curves.iter().find(|c| c.name == "K0").unwrap();
    let (a, b) = (k0.first().unwrap(), k0.last().unwrap());
    assert!((a.re - 0.5).abs() < 1e-15 && (a.im - 3f64.sqrt() / 2.0).abs() < 1e-15);
    assert!((b.re - 2.0).abs() < 1e-15 && b.im.abs() < 1e-15);
    assert_eq!(set.layer("ncf").count(), 10);
    let j: Vec<_> = set.layer("jorgensen").collect();
    assert!(j[0].points().all(|z| (z.norm() - 0.5).abs() < 1e-15));
    assert_eq!(set.layer("tess_circles").count(), 8);
    assert_eq!(set.layer("d2_square").count(), 4);
}

#[test]
fn nsdc_by_iteration() {
    let n = 257;
    let [r, l] = nsdc_from_iteration(n).unwrap();
    assert!(r.max_residual() < 1e-9 && l.max_residual() < 1e-9);
    // corner (1/2, 1/2) and side midpoint (1/2, 0)
    let (x, y) = f(0.5, 0.5);
    assert!((-4.0 * x).abs() < 1e-15 && (-4.0 * y - 4.0).abs() < 1e-15);
    let (x, _) = f(0.5, 0.0);
    assert_eq!(-4.0 * x, 2.0);
    let set = named_boundaries(n).unwrap();
    let named: Vec<_> = set.layer("nsdc").collect();
    for (a, b) in [(&r, named[0]), (&l, named[1])] {
        let haus = a
            .samples
            .iter()
            .map(|p| {
                b.samples
                    .iter()
                    .map(|q| ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max);
        assert!(haus < 1e-9);
    }
}

fn lam(c: ComplexValue) -> ConfigInput {
    ConfigInput::Lambda(c)
}

#[test]
fn classical_configurations() {
    let cfg = build_configuration(ConfigCase::ClassicalInterior, &lam(ComplexValue::int(0, 2))).unwrap();
    assert_eq!(cfg.tangencies.len(), 2);
    assert!(cfg.l2.vertices().iter().all(|z| (z.im - 2.0).abs() < 1e-12));
    assert!(cfg.l1.vertices().iter().all(|z| (z.im + 2.0).abs() < 1e-12));
    let r = verify_configuration(&cfg);
    assert!(r.pairing_ok && r.disjoint_ok && r.ok);
    let cfg = build_configuration(ConfigCase::ClassicalBoundary, &lam(ComplexValue::int(0, 1))).unwrap();
    assert_eq!(cfg.tangencies.len(), 6);
    for l in [ComplexValue::int(2, 0), ComplexValue::int(-2, 0)] {
        let cfg = build_configuration(ConfigCase::ClassicalBoundary, &lam(l)).unwrap();
        assert_eq!(cfg.tangencies.len(), 4);
    }
    assert!(matches!(
        build_configuration(ConfigCase::ClassicalInterior, &lam(ComplexValue::ratio(3, 10, 0, 1))),
        Err(Error::WrongRegion(_))
    ));
    assert!(matches!(
        build_configuration(ConfigCase::ClassicalBoundary, &lam(ComplexValue::int(0, 2))),
        Err(Error::WrongRegion(_))
    ));
}

#[test]
fn ncf_configurations() {
    let s3 = 3f64.sqrt();
    let on_k = ComplexValue::float(1.0, 1.0 / s3);
    let cfg = build_configuration(ConfigCase::NcfBoundary, &lam(on_k)).unwrap();
    assert!(!cfg.recipe_extrapolated);
    assert_eq!(cfg.tangencies.len(), 8);
    let t = 75f64.to_radians();
    let on_arc = ComplexValue::float(t.cos(), t.sin());
    let cfg = build_configuration(ConfigCase::NcfBoundary, &lam(on_arc)).unwrap();
    assert!(cfg.recipe_extrapolated);
    assert!(matches!(
        build_configuration(ConfigCase::NcfBoundary, &lam(ComplexValue::float(1.5, 0.4))),
        Err(Error::WrongRegion(_))
    ));
    for q in [ComplexValue::float(3.0, 0.8), ComplexValue::float(0.6, 1.94), ComplexValue::float(-2.4, -1.0)] {
        let cfg = build_configuration(ConfigCase::NcfInterior, &ConfigInput::Q(q.clone())).unwrap();
        assert!(cfg.lambda.approx_eq(&q.scale(&Real::ratio(1, 2)), 1e-15));
        let r = verify_configuration(&cfg);
        assert!(r.ok && r.s_residual < 1e-9 && r.t_residual < 1e-9);
        assert_eq!(r.tangency_count, 2);
    }
    assert!(matches!(
        build_configuration(ConfigCase::NcfInterior, &ConfigInput::Q(ComplexValue::int(0, 4))),
        Err(Error::WrongRegion(_))
    ));
}

#[test]
fn verifier_negative_controls() {
    let mut cfg = build_configuration(ConfigCase::ClassicalInterior, &lam(ComplexValue::int(0, 2))).unwrap();
    let good = cfg.c2.clone();
    cfg.c2 = Circle { center: [good.center[0] + 0.1, good.center[1]], radius: good.radius };
    let r = verify_configuration(&cfg);
    assert!(!r.pairing_ok && !r.ok);
    cfg.c2 = cfg.c1.clone();
    cfg.s_pairing = MoebiusMatrix::identity();
    let r = verify_configuration(&cfg);
    assert!(r.pairing_trivial && !r.pairing_ok);
}

#[test]
fn exports_are_deterministic() {
    let set = named_boundaries(65).unwrap();
    let vp = Viewport::square(4.5, 400);
    assert_eq!(curves_to_svg(&set, &vp), curves_to_svg(&set, &vp));
    let svg = curves_to_svg(&set, &vp);
    for id in ["jorgensen", "schottky", "nsdc", "ncf", "tess_circles"] {
        assert!(svg.contains(&format!("<g id=\"{id}\"")), "{id}");
    }
    let csv = curves_to_csv(&set.curves);
    let rows = set.curves.iter().map(|c| c.samples.len()).sum::<usize>();
    assert_eq!(csv.lines().count(), rows + 1);
    assert!(csv.starts_with("curve_id,kind,x,y\n"));
    let json: serde_json::Value = serde_json::from_str(&curves_to_json(&set.curves, false)).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["curves"].as_array().unwrap().len(), set.curves.len());
    assert_eq!(figure_regions_svg(65).unwrap(), figure_regions_svg(65).unwrap());
    let t = figure_tessellation_svg(3, 65).unwrap();
    assert!(t.contains("<g id=\"preimages_n\"") && t.contains("<g id=\"preimages_3\""));
}

proptest! {
    #[test]
    fn classical_interior_always_verifies(x in -6.0f64..6.0, y in -6.0f64..6.0) {
        prop_assume!(y.abs() > 1.0 - x * x / 4.0 + 1e-6);
        let cfg = build_configuration(ConfigCase::ClassicalInterior, &lam(ComplexValue::float(x, y))).unwrap();
        let r = verify_configuration(&cfg);
        prop_assert!(r.ok);
        prop_assert_eq!(r.tangency_count, 2);
    }

    #[test]
    fn ncf_interior_always_verifies(x in -2.0f64..2.0, frac in 0.0f64..1.0, up in any::<bool>()) {
        let y = if up { 1.0 } else { -1.0 } * frac * (1.0 - x * x / 4.0);
        let l = ComplexValue::float(x, y);
        prop_assume!(twopar::regions::in_ncf(&l).is_some());
        let cfg = build_configuration(ConfigCase::NcfInterior, &lam(l)).unwrap();
        prop_assert_eq!(verify_configuration(&cfg).tangency_count, 2);
    }

    #[test]
    fn pullback_forward_residual(n in 2u32..=4, k in 0usize..64) {
        for c in boundary_nth(n, 64).unwrap() {
            let p = c.samples[k];
            let (fx, fy) = fn_iter((p[0], p[1]), n);
            prop_assert!(p_residual(fx, fy) < 1e-9);
        }
    }
}
