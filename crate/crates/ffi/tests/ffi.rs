use std::ffi::{c_char, CStr, CString};
use std::ptr;

use serde_json::Value;
use twopar_ffi::*;

fn take(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { tp_string_free(p) };
    s
}

fn last_error() -> String {
    let p = tp_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(tp_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn group_lifecycle() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { tp_group_new(cs("1/2-1/2i").as_ptr(), &mut g) }, TpStatus::Ok);
    assert_eq!(unsafe { tp_group_is_exact(g) }, 1);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tp_group_trace_identities_json(g, &mut out) }, TpStatus::Ok);
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    assert!(v["identities"].as_array().unwrap().iter().all(|i| i["holds"] == true));

    assert_eq!(unsafe { tp_group_word_json(g, cs("STst").as_ptr(), &mut out) }, TpStatus::Ok);
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    assert!(v.is_object());

    assert_eq!(unsafe { tp_group_tower_json(g, 2, &mut out) }, TpStatus::Ok);
    take(out);
    assert_eq!(unsafe { tp_group_whitehead_json(g, &mut out) }, TpStatus::Ok);
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["commutes"], true);

    assert_eq!(unsafe { tp_group_word_json(g, cs("SxT").as_ptr(), &mut out) }, TpStatus::BadWord);
    assert!(last_error().contains('x'));
    unsafe { tp_group_free(g) };
    unsafe { tp_group_free(ptr::null_mut()) };
}

#[test]
fn group_errors() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { tp_group_new(cs("0").as_ptr(), &mut g) }, TpStatus::ZeroLambda);
    assert!(g.is_null());
    assert_eq!(unsafe { tp_group_new(cs("1/0").as_ptr(), &mut g) }, TpStatus::Parse);
    assert_eq!(unsafe { tp_group_new(ptr::null(), &mut g) }, TpStatus::NullArgument);
    assert_eq!(unsafe { tp_group_new(cs("2i").as_ptr(), ptr::null_mut()) }, TpStatus::NullArgument);
    assert_eq!(unsafe { tp_group_is_exact(ptr::null()) }, -1);
    let bad = [0xffu8 as c_char, 0];
    assert_eq!(unsafe { tp_group_new(bad.as_ptr(), &mut g) }, TpStatus::InvalidUtf8);
}

#[test]
fn classify_and_certify() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tp_classify_json(cs("2i").as_ptr(), &mut out) }, TpStatus::Ok);
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["classical_ts"], "interior");

    assert_eq!(unsafe { tp_certify_json(cs("1/2-1/2i").as_ptr(), 8, &mut out) }, TpStatus::Ok);
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["kind"], "dust_and_nonfree");

    out = ptr::null_mut();
    assert_eq!(unsafe { tp_certify_json(cs("2i").as_ptr(), 8, &mut out) }, TpStatus::NotFound);
    assert!(out.is_null());
}

#[test]
fn dynamics_entry_points() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tp_f_iter_json(cs("1/2-1/2i").as_ptr(), 2, &mut out) }, TpStatus::Ok);
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    let direct = serde_json::to_value(twopar::dynamics::f_iter(&twopar::ComplexValue::int(0, 1), 1)).unwrap();
    assert_eq!(v, direct);

    let mut n = 99;
    assert_eq!(unsafe { tp_schottky_index(cs("2i").as_ptr(), &mut n) }, TpStatus::Ok);
    assert_eq!(n, 0);
    assert_eq!(unsafe { tp_schottky_index(cs("1/4").as_ptr(), &mut n) }, TpStatus::NotFound);
    assert_eq!(unsafe { tp_schottky_index(cs("2i").as_ptr(), ptr::null_mut()) }, TpStatus::NullArgument);
}

#[test]
fn curves_svg() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tp_curves_svg(33, 0, &mut out) }, TpStatus::Ok);
    let a = take(out);
    assert!(a.starts_with("<svg"));
    assert_eq!(unsafe { tp_curves_svg(33, 0, &mut out) }, TpStatus::Ok);
    assert_eq!(a, take(out));
    assert_eq!(unsafe { tp_curves_svg(33, 2, &mut out) }, TpStatus::Ok);
    assert!(take(out).contains("preimages_2"));
    assert_eq!(unsafe { tp_curves_svg(1, 0, &mut out) }, TpStatus::InvalidArgument);
}

#[test]
fn header_is_current() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/twopar.h")).unwrap();
    for f in [
        "tp_version",
        "tp_last_error",
        "tp_string_free",
        "tp_group_new",
        "tp_group_free",
        "tp_classify_json",
        "tp_certify_json",
        "tp_f_iter_json",
        "tp_schottky_index",
        "tp_curves_svg",
    ] {
        assert!(h.contains(&format!("{f}(")), "{f}");
    }
    assert!(h.contains("typedef struct TpGroup TpGroup;"));
    assert!(h.contains("TP_STATUS_NOT_FOUND = 9"));
}
