mod common;

use common::gaussian_rational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twopar::dynamics::*;
use twopar::{ComplexValue, Error, Real};

fn cv(re: i64, im: i64) -> ComplexValue {
    ComplexValue::int(re, im)
}

/// Oracle: the closed-region test written out in plain floats.
fn classical_f64(x: f64, y: f64) -> bool {
    y.abs() >= 1.0 - x * x / 4.0
}

#[test]
fn f_examples() {
    assert_eq!(f(&ComplexValue::ratio(1, 2, -1, 2)), cv(0, 1));
    assert_eq!(f(&cv(0, 1)), cv(2, 0));
    assert_eq!(f(&ComplexValue::zero()), ComplexValue::zero());
    assert_eq!(f_iter(&ComplexValue::ratio(1, 2, -1, 2), 2), cv(2, 0));
    let l = ComplexValue::ratio(3, 7, 1, 9);
    assert_eq!(f_iter(&l, 0), l);
}

#[test]
fn modulus_law_at_point_six() {
    let v = f_iter(&ComplexValue::float(0.6, 0.0), 3).abs_f64();
    let closed = 1.2f64.powi(8) / 2.0;
    assert!((v - closed).abs() < 1e-12);
    assert!((v - 2.1499).abs() < 1e-4);
}

#[test]
fn preimage_examples() {
    let [a, b] = f_preimages(&cv(0, 1));
    let want = [ComplexValue::ratio(1, 2, -1, 2), ComplexValue::ratio(-1, 2, 1, 2)];
    assert!(want.contains(&a) && want.contains(&b) && a != b);
    assert_eq!(f_preimages(&ComplexValue::zero()), [ComplexValue::zero(), ComplexValue::zero()]);
    let [a, b] = f_preimages(&cv(2, 0));
    assert!([cv(0, 1), cv(0, -1)].contains(&a) && [cv(0, 1), cv(0, -1)].contains(&b) && a != b);
    // Non-square: floating
    assert!(!f_preimages(&cv(3, 0))[0].is_exact());
}

#[test]
fn t_radius_examples() {
    assert_eq!(t_radius(-1).unwrap(), Real::int(2));
    assert_eq!(t_radius(0).unwrap(), Real::int(1));
    assert!((t_radius(1).unwrap().to_f64() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-8);
    assert!(matches!(t_radius(-2), Err(Error::BadIndex(-2))));
    let t1 = t_radius(1).unwrap().to_f64();
    assert!((f(&ComplexValue::float(t1, 0.0)).abs_f64() - 1.0).abs() < 1e-15);
}

#[test]
fn circles_map_to_circles() {
    for n in 1..=6 {
        let tn = t_radius(n).unwrap().to_f64();
        let tm = t_radius(n - 1).unwrap().to_f64();
        for k in 0..64 {
            let th = k as f64 * std::f64::consts::TAU / 64.0;
            let z = ComplexValue::float(tn * th.cos(), tn * th.sin());
            assert!((f(&z).abs_f64() - tm).abs() < 1e-12);
        }
    }
}

#[test]
fn schottky_index_examples() {
    assert_eq!(schottky_index(&cv(0, 2)).unwrap().value(), Some(0));
    assert_eq!(
        schottky_index(&ComplexValue::ratio(3, 10, 0, 1)).unwrap(),
        SchottkyIndex::Never { reason: NeverReason::InsideJorgensen }
    );
    assert_eq!(schottky_index(&ComplexValue::ratio(0, 1, 9, 10)).unwrap().value(), Some(2));
    assert!(matches!(schottky_index(&ComplexValue::zero()), Err(Error::ZeroLambda)));
    assert_eq!(
        schottky_index(&ComplexValue::ratio(1, 2, 0, 1)).unwrap(),
        SchottkyIndex::Never { reason: NeverReason::OnJorgensenCircle }
    );
}

#[test]
fn schottky_index_uniqueness_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let r: f64 = rng.gen_range(0.5001..std::f64::consts::FRAC_1_SQRT_2);
        let th: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let l = ComplexValue::float(r * th.cos(), r * th.sin());
        let n = schottky_index(&l).unwrap().value().expect("finite index outside the Jorgensen circle");
        let z = l.to_complex64();
        let mut w = z;
        for _ in 0..n {
            w = -2.0 * w * w;
        }
        assert!(classical_f64(w.re, w.im));
        if n > 0 {
            let mut w = z;
            for _ in 0..n - 1 {
                w = -2.0 * w * w;
            }
            assert!(!classical_f64(w.re, w.im));
        }
    }
}

#[test]
fn lateral_vertical_examples() {
    let l = ComplexValue::ratio(3, 10, 0, 1);
    assert_eq!(lateral(&l, 1).unwrap(), l);
    assert_eq!(vertical(&lateral(&l, 2).unwrap()), ComplexValue::ratio(-18, 25, 0, 1));
    assert_eq!(lateral(&ComplexValue::ratio(1, 4, 1, 4), 2).unwrap(), ComplexValue::ratio(1, 2, 1, 2));
    assert!(matches!(lateral(&l, 0), Err(Error::ZeroMultiplier)));
}

#[test]
fn program_examples() {
    let p = |s: &str| s.parse::<IterationProgram>().unwrap();
    assert!(programs_equal(&p("V L3"), &p("L9 V")).unwrap());
    assert!(!programs_equal(&p("L2 V"), &p("V L2")).unwrap());
    let l = ComplexValue::ratio(2, 7, -1, 3);
    assert_eq!(run_program(&l, &IterationProgram::empty()).unwrap(), l);
    assert!(matches!("V L0".parse::<IterationProgram>(), Err(Error::MalformedProgram(_))));
}

fn program() -> impl Strategy<Value = IterationProgram> {
    prop::collection::vec(
        prop_oneof![Just(Step::V), (-5i64..=5).prop_filter("nonzero", |n| *n != 0).prop_map(Step::L)],
        0..=8,
    )
    .prop_map(|s| IterationProgram::new(s).unwrap())
}

proptest! {
    #[test]
    fn modulus_law_exact(z in gaussian_rational()) {
        let lhs = f(&z).norm_sqr();
        let rhs = &Real::int(4) * &z.norm_sqr().square();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn preimages_round_trip(re in -5.0f64..5.0, im in -5.0f64..5.0) {
        let w = ComplexValue::float(re, im);
        for p in f_preimages(&w) {
            prop_assert!(f(&p).approx_eq(&w, 1e-12 * (1.0 + w.abs_f64())));
        }
    }

    #[test]
    fn normal_form_matches_run(z in gaussian_rational(), p in program()) {
        prop_assume!(p.steps.iter().filter(|s| **s == Step::V).count() <= 4);
        let nf = normalize_program(&p).unwrap();
        prop_assert_eq!(run_program(&z, &p).unwrap(), nf.evaluate(&z));
    }
}
