//! C ABI over `twopar`.
//!
//! Parameters are passed as literals (`"1/2-1/2i"`, `"0.3+0.4i"`, ...).
//! Strings returned by the library are owned by the caller and must be
//! released with [`tp_string_free`]. On failure a function returns a
//! nonzero [`TpStatus`] (or NULL) and [`tp_last_error`] holds the message.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use twopar::curves::export::{figure_regions_svg, figure_tessellation_svg};
use twopar::dynamics::{f_iter, schottky_index};
use twopar::group2p::MarkedGroup;
use twopar::literal::parse_lambda;
use twopar::regions::{certify, classify};
use twopar::{ComplexValue, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TpStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    ZeroLambda = 4,
    BadWord = 5,
    DepthExceeded = 6,
    WrongRegion = 7,
    ConstructionFailed = 8,
    NotFound = 9,
    Internal = 10,
    InvalidArgument = 11,
}

/// Opaque marked group `<S, T>`.
pub struct TpGroup {
    inner: MarkedGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> TpStatus {
    match e {
        Error::Parse(_) | Error::UnknownName(_) => TpStatus::Parse,
        Error::ZeroLambda => TpStatus::ZeroLambda,
        Error::BadLetter { .. } | Error::IdentityElement => TpStatus::BadWord,
        Error::DepthExceeded { .. } => TpStatus::DepthExceeded,
        Error::WrongRegion(_) => TpStatus::WrongRegion,
        Error::ConstructionFailed(_) => TpStatus::ConstructionFailed,
        Error::BadSampleCount(_)
        | Error::BadIndex(_)
        | Error::ZeroMultiplier
        | Error::ZeroOffset
        | Error::DegenerateLine(_)
        | Error::EmptyRange(_)
        | Error::MalformedProgram(_) => TpStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> TpStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, TpStatus> {
    if p.is_null() {
        set_error("null argument".into());
        return Err(TpStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8".into());
        TpStatus::InvalidUtf8
    })
}

unsafe fn read_lambda(p: *const c_char) -> Result<ComplexValue, TpStatus> {
    let s = read_str(p)?;
    parse_lambda(s).map(|l| l.value).map_err(fail)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> TpStatus {
    if out.is_null() {
        set_error("null output pointer".into());
        return TpStatus::NullArgument;
    }
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            clear_error();
            TpStatus::Ok
        }
        Err(_) => {
            set_error("output contains NUL".into());
            TpStatus::Internal
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failure on this thread, or NULL. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn tp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build the group for `lambda`. Writes a new handle to `out`.
///
/// # Safety
/// `lambda` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_group_new(lambda: *const c_char, out: *mut *mut TpGroup) -> TpStatus {
    if out.is_null() {
        set_error("null output pointer".into());
        return TpStatus::NullArgument;
    }
    let l = tri!(read_lambda(lambda));
    match MarkedGroup::new(l) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(TpGroup { inner: g }));
            clear_error();
            TpStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// # Safety
/// `g` must be NULL or a handle from [`tp_group_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tp_group_free(g: *mut TpGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// 1 if the group's matrices are exact, 0 if floating, -1 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tp_group_is_exact(g: *const TpGroup) -> i32 {
    match g.as_ref() {
        Some(g) => i32::from(g.inner.is_exact()),
        None => -1,
    }
}

unsafe fn group_json(
    g: *const TpGroup,
    out: *mut *mut c_char,
    f: impl FnOnce(&MarkedGroup) -> Result<String, Error>,
) -> TpStatus {
    let Some(g) = g.as_ref() else {
        set_error("null group".into());
        return TpStatus::NullArgument;
    };
    match f(&g.inner) {
        Ok(s) => write_string(out, s),
        Err(e) => fail(e),
    }
}

/// Trace identities of the group as JSON.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_group_trace_identities_json(g: *const TpGroup, out: *mut *mut c_char) -> TpStatus {
    group_json(g, out, |g| Ok(to_json(&g.trace_identities())))
}

/// Matrix of a word in `S, s, T, t` as JSON.
///
/// # Safety
/// `g` must be a live handle, `word` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tp_group_word_json(g: *const TpGroup, word: *const c_char, out: *mut *mut c_char) -> TpStatus {
    let w = tri!(read_str(word));
    group_json(g, out, |g| g.evaluate_word(w).map(|m| to_json(&m)))
}

/// Tower element `P_i` as JSON.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_group_tower_json(g: *const TpGroup, i: u32, out: *mut *mut c_char) -> TpStatus {
    group_json(g, out, |g| g.parabolic_tower(i).map(|m| to_json(&m)))
}

/// Whitehead-link analysis as JSON.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_group_whitehead_json(g: *const TpGroup, out: *mut *mut c_char) -> TpStatus {
    group_json(g, out, |g| Ok(to_json(&g.whitehead_analysis())))
}

/// Region report for `lambda` as JSON.
///
/// # Safety
/// `lambda` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_classify_json(lambda: *const c_char, out: *mut *mut c_char) -> TpStatus {
    let l = tri!(read_lambda(lambda));
    match classify(&l) {
        Ok(r) => write_string(out, to_json(&r)),
        Err(e) => fail(e),
    }
}

/// Certificate for `lambda` as JSON. Returns `NotFound` when no
/// certificate exists up to `max_depth`; `out` is then untouched.
///
/// # Safety
/// `lambda` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_certify_json(lambda: *const c_char, max_depth: u32, out: *mut *mut c_char) -> TpStatus {
    let l = tri!(read_lambda(lambda));
    match certify(&l, max_depth) {
        Ok(Some(c)) => write_string(out, to_json(&c)),
        Ok(None) => {
            set_error("no certificate".into());
            TpStatus::NotFound
        }
        Err(e) => fail(e),
    }
}

/// `f^n(z)` as a JSON complex value.
///
/// # Safety
/// `z` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_f_iter_json(z: *const c_char, n: u32, out: *mut *mut c_char) -> TpStatus {
    let z = tri!(read_lambda(z));
    write_string(out, to_json(&f_iter(&z, n)))
}

/// Schottky index of `lambda`: writes `n` and returns `Ok`, or returns
/// `NotFound` when no iterate reaches the classical region.
///
/// # Safety
/// `lambda` must be NUL-terminated; `n` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_schottky_index(lambda: *const c_char, n: *mut u32) -> TpStatus {
    if n.is_null() {
        set_error("null output pointer".into());
        return TpStatus::NullArgument;
    }
    let l = tri!(read_lambda(lambda));
    match schottky_index(&l) {
        Ok(ix) => match ix.value() {
            Some(k) => {
                *n = k;
                clear_error();
                TpStatus::Ok
            }
            None => {
                set_error(to_json(&ix));
                TpStatus::NotFound
            }
        },
        Err(e) => fail(e),
    }
}

/// Parameter-plane figure as SVG. With `preimage_depth > 0` the
/// tessellation figure is drawn instead.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tp_curves_svg(samples: usize, preimage_depth: u32, out: *mut *mut c_char) -> TpStatus {
    let svg = if preimage_depth == 0 {
        figure_regions_svg(samples)
    } else {
        figure_tessellation_svg(preimage_depth, samples)
    };
    match svg {
        Ok(s) => write_string(out, s),
        Err(e) => fail(e),
    }
}
