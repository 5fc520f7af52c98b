//! C interface to `mvtool`.
//!
//! Models are opaque handles. Every call returns an `int32_t` status: `0`,
//! `1` and `2` mirror the CLI exit codes (holds, counterexample,
//! inconclusive) and negative values are errors whose message is available
//! from [`mvtool_last_error_message`]. Reports are JSON strings owned by the
//! caller and released with [`mvtool_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use mvtool::cli::{self, Report, RoundTripTarget};
use mvtool::sequent::CheckOptions;
use mvtool::{parse_elements, parse_group, parse_monoid, parse_mv, ModelHandle, Structure};

pub const MVTOOL_HOLDS: i32 = 0;
pub const MVTOOL_COUNTEREXAMPLE: i32 = 1;
pub const MVTOOL_INCONCLUSIVE: i32 = 2;
/// A required pointer argument was null.
pub const MVTOOL_ERR_NULL: i32 = -1;
/// A string argument was not UTF-8.
pub const MVTOOL_ERR_UTF8: i32 = -2;
/// The library rejected the input (parse error, unknown label, size cap...).
pub const MVTOOL_ERR_INVALID: i32 = -3;
/// An internal panic was caught at the boundary.
pub const MVTOOL_ERR_PANIC: i32 = -4;

/// A parsed model with its optional distinguished element.
pub struct MvtoolModel {
    inner: ModelHandle,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Fail(i32, String);

impl From<mvtool::Error> for Fail {
    fn from(e: mvtool::Error) -> Self {
        Fail(MVTOOL_ERR_INVALID, e.to_string())
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(MVTOOL_ERR_NULL, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(MVTOOL_ERR_UTF8, format!("{what} is not UTF-8")))
}

unsafe fn optional_text<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Fail> {
    if p.is_null() {
        Ok(None)
    } else {
        text(p, what).map(Some)
    }
}

/// Runs `f`, translating failures and panics into status codes.
fn guard(f: impl FnOnce() -> Result<i32, Fail>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(code)) => {
            set_error("");
            code
        }
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            MVTOOL_ERR_PANIC
        }
    }
}

unsafe fn emit(report: Report, out: *mut *mut c_char) -> Result<i32, Fail> {
    let s = CString::new(report.to_json_string(None)).map_err(|e| Fail(MVTOOL_ERR_INVALID, e.to_string()))?;
    *out = s.into_raw();
    Ok(report.outcome.exit_code())
}

fn check_out<T>(out: *mut *mut T) -> Result<(), Fail> {
    if out.is_null() {
        Err(Fail(MVTOOL_ERR_NULL, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

/// Parses a model descriptor. `unit` may be null.
///
/// # Safety
/// String arguments must be null or valid NUL-terminated strings; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn mvtool_model_new(
    descriptor: *const c_char,
    unit: *const c_char,
    out: *mut *mut MvtoolModel,
) -> i32 {
    guard(|| {
        check_out(out)?;
        let inner = cli::load_model(text(descriptor, "descriptor")?, optional_text(unit, "unit")?)?;
        *out = Box::into_raw(Box::new(MvtoolModel { inner }));
        Ok(MVTOOL_HOLDS)
    })
}

/// Releases a model; null is ignored.
///
/// # Safety
/// `model` must come from [`mvtool_model_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mvtool_model_free(model: *mut MvtoolModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// The model's descriptor as a newly allocated string.
///
/// # Safety
/// `model` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mvtool_model_name(model: *const MvtoolModel, out: *mut *mut c_char) -> i32 {
    guard(|| {
        check_out(out)?;
        let m = model.as_ref().ok_or_else(|| Fail(MVTOOL_ERR_NULL, "model is null".into()))?;
        *out = CString::new(m.inner.to_string()).unwrap_or_default().into_raw();
        Ok(MVTOOL_HOLDS)
    })
}

/// Checks a sequent (registry label, `@path` or inline source) at `bound`
/// and writes the JSON report to `out`.
///
/// # Safety
/// `model` must be a live handle, `sequent` a valid string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mvtool_check(
    model: *const MvtoolModel,
    sequent: *const c_char,
    bound: u64,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        check_out(out)?;
        let m = model.as_ref().ok_or_else(|| Fail(MVTOOL_ERR_NULL, "model is null".into()))?;
        let s = cli::load_sequent(text(sequent, "sequent")?)?;
        emit(cli::check(&m.inner, &s, &CheckOptions::new(bound))?, out)
    })
}

/// Decomposes an MV-algebra along comma-separated generators.
///
/// # Safety
/// String arguments must be valid strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mvtool_decompose(
    descriptor: *const c_char,
    gens: *const c_char,
    bound: u64,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        check_out(out)?;
        let a = parse_mv(text(descriptor, "descriptor")?)?;
        let gens = parse_elements(&Structure::Mv(a.clone()), text(gens, "gens")?)?;
        emit(cli::decompose(&a, &gens, bound)?, out)
    })
}

/// Runs a round trip. `kind` is one of `group`, `algebra`, `monoid`, `chi`,
/// `pairs`, as for the CLI flags.
///
/// # Safety
/// String arguments must be valid strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mvtool_roundtrip(
    kind: *const c_char,
    descriptor: *const c_char,
    bound: u64,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        check_out(out)?;
        let d = text(descriptor, "descriptor")?;
        let target = match text(kind, "kind")? {
            "group" => RoundTripTarget::Group(parse_group(d)?),
            "algebra" => RoundTripTarget::Algebra(parse_mv(d)?),
            "monoid" => RoundTripTarget::Monoid(parse_monoid(d)?),
            "chi" => RoundTripTarget::Chi(parse_group(d)?),
            "pairs" => RoundTripTarget::Pairs(parse_mv(d)?),
            other => return Err(Fail(MVTOOL_ERR_INVALID, format!("unknown round trip `{other}`"))),
        };
        emit(cli::roundtrip(&target, bound)?, out)
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mvtool_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The message of the last failed call on this thread, or an empty string.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn mvtool_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
