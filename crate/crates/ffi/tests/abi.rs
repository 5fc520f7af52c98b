use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::process::Command;
use std::ptr;

use mvtool_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(p: *mut c_char) -> serde_json::Value {
    assert!(!p.is_null());
    let v = serde_json::from_str(CStr::from_ptr(p).to_str().unwrap()).unwrap();
    mvtool_string_free(p);
    v
}

unsafe fn last_error() -> String {
    CStr::from_ptr(mvtool_last_error_message()).to_string_lossy().into_owned()
}

unsafe fn model(desc: &str, unit: Option<&str>) -> *mut MvtoolModel {
    let unit = unit.map(c);
    let mut m = ptr::null_mut();
    let code = mvtool_model_new(c(desc).as_ptr(), unit.as_ref().map_or(ptr::null(), |u| u.as_ptr()), &mut m);
    assert_eq!(code, MVTOOL_HOLDS, "{}", last_error());
    m
}

#[test]
fn check_through_the_abi() {
    unsafe {
        let m = model("L(2)", None);
        let mut out = ptr::null_mut();
        assert_eq!(mvtool_check(m, c("xi").as_ptr(), 3, &mut out), MVTOOL_COUNTEREXAMPLE);
        let j = take(out);
        assert_eq!(j["counterexample"]["x"], "1/2");
        assert_eq!(j["schema"], 1);
        assert!(j.get("elapsed_ms").is_none());

        let mut name = ptr::null_mut();
        assert_eq!(mvtool_model_name(m, &mut name), MVTOOL_HOLDS);
        assert_eq!(CStr::from_ptr(name).to_str().unwrap(), "L(2)");
        mvtool_string_free(name);
        mvtool_model_free(m);

        let m = model("C", None);
        assert_eq!(mvtool_check(m, c("gamma_3").as_ptr(), 64, &mut out), MVTOOL_HOLDS);
        take(out);
        mvtool_model_free(m);
    }
}

#[test]
fn decompose_and_roundtrip() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            mvtool_decompose(c("Prod(C,C)").as_ptr(), c("(c,1-c)").as_ptr(), 6, &mut out),
            MVTOOL_HOLDS
        );
        assert_eq!(take(out)["factor_descriptors"], serde_json::json!(["C", "C"]));
        assert_eq!(mvtool_roundtrip(c("group").as_ptr(), c("Lex(Z,Z)").as_ptr(), 3, &mut out), MVTOOL_HOLDS);
        assert_eq!(take(out)["failures"], serde_json::json!([]));
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(mvtool_model_new(c("Q(7)").as_ptr(), ptr::null(), &mut m), MVTOOL_ERR_INVALID);
        assert!(m.is_null());
        assert!(last_error().contains("Q"), "{}", last_error());
        assert_eq!(mvtool_model_new(ptr::null(), ptr::null(), &mut m), MVTOOL_ERR_NULL);

        let m = model("C", None);
        let mut out = ptr::null_mut();
        assert_eq!(mvtool_check(m, c("no_such_label").as_ptr(), 3, &mut out), MVTOOL_ERR_INVALID);
        assert!(out.is_null());
        assert_eq!(mvtool_check(m, c("xi").as_ptr(), 3, ptr::null_mut()), MVTOOL_ERR_NULL);
        let bad = [0xffu8, 0];
        assert_eq!(mvtool_check(m, bad.as_ptr() as *const c_char, 3, &mut out), MVTOOL_ERR_UTF8);
        assert_eq!(
            mvtool_roundtrip(c("sideways").as_ptr(), c("Z").as_ptr(), 3, &mut out),
            MVTOOL_ERR_INVALID
        );
        mvtool_model_free(m);
        mvtool_model_free(ptr::null_mut());
        mvtool_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_export_and_compiles() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/mvtool.h")).unwrap();
    for sym in [
        "mvtool_model_new",
        "mvtool_model_free",
        "mvtool_model_name",
        "mvtool_check",
        "mvtool_decompose",
        "mvtool_roundtrip",
        "mvtool_string_free",
        "mvtool_last_error_message",
        "typedef struct MvtoolModel MvtoolModel",
    ] {
        assert!(header.contains(sym), "header lacks {sym}");
    }
    let tmp = tempfile::tempdir().unwrap();
    let src = tmp.path().join("use.c");
    std::fs::write(&src, "#include \"mvtool.h\"\nint main(void) { return mvtool_model_new(0, 0, 0) == MVTOOL_ERR_NULL ? 0 : 1; }\n").unwrap();
    match Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
        .arg(format!("{dir}/include"))
        .arg(&src)
        .status()
    {
        Ok(st) => assert!(st.success(), "header does not compile as C"),
        Err(_) => eprintln!("no C compiler; skipped the syntax check"),
    }
}
