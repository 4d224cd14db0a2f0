use std::ffi::{CStr, CString};
use std::ptr;

use toric_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { toric_string_free(s) };
    out
}

fn last_error() -> String {
    let p = toric_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn presentation_roundtrip_and_cayley() {
    let fam = CString::new("toric").unwrap();
    let params = [3u32, 2, 3];
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(
            toric_presentation_new(fam.as_ptr(), params.as_ptr(), 3, &mut p),
            ToricStatus::Ok
        );
        let mut text = ptr::null_mut();
        assert_eq!(toric_presentation_to_string(p, &mut text), ToricStatus::Ok);
        let text = take(text);
        assert!(text.starts_with("gens: x1 x2\n"));

        let ctext = CString::new(text).unwrap();
        let mut q = ptr::null_mut();
        assert_eq!(toric_presentation_parse(ctext.as_ptr(), &mut q), ToricStatus::Ok);

        let mut c = ptr::null_mut();
        assert_eq!(toric_cayley_new(q, 1000, &mut c), ToricStatus::Ok);
        assert_eq!(toric_cayley_order(c), 24);
        let mut id = -1;
        let w = CString::new("x1^3").unwrap();
        assert_eq!(toric_cayley_is_identity(c, w.as_ptr(), &mut id), ToricStatus::Ok);
        assert_eq!(id, 1);
        let w = CString::new("x1 x2").unwrap();
        assert_eq!(toric_cayley_is_identity(c, w.as_ptr(), &mut id), ToricStatus::Ok);
        assert_eq!(id, 0);
        let w = CString::new("x7").unwrap();
        assert_eq!(toric_cayley_is_identity(c, w.as_ptr(), &mut id), ToricStatus::Parse);
        toric_cayley_free(c);
        toric_presentation_free(q);
        toric_presentation_free(p);
    }
}

#[test]
fn overflow_is_unknown() {
    let fam = CString::new("toric").unwrap();
    let params = [6u32, 2, 3];
    let mut p = ptr::null_mut();
    let mut c = ptr::null_mut();
    unsafe {
        assert_eq!(
            toric_presentation_new(fam.as_ptr(), params.as_ptr(), 3, &mut p),
            ToricStatus::Ok
        );
        assert_eq!(toric_cayley_new(p, 2000, &mut c), ToricStatus::Unknown);
        assert!(c.is_null());
        assert!(last_error().contains("2000"));
        toric_presentation_free(p);
    }
}

#[test]
fn invalid_arguments() {
    let fam = CString::new("toric").unwrap();
    let bad = [2u32, 4, 6];
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(
            toric_presentation_new(fam.as_ptr(), bad.as_ptr(), 3, &mut p),
            ToricStatus::InvalidArgument
        );
        let nope = CString::new("no-such-family").unwrap();
        assert_eq!(
            toric_presentation_new(nope.as_ptr(), bad.as_ptr(), 3, &mut p),
            ToricStatus::InvalidArgument
        );
        assert!(last_error().contains("no-such-family"));
        assert_eq!(
            toric_presentation_new(ptr::null(), bad.as_ptr(), 3, &mut p),
            ToricStatus::NullPointer
        );
        assert_eq!(toric_cayley_order(ptr::null()), 0);
        toric_presentation_free(ptr::null_mut());
        toric_string_free(ptr::null_mut());
    }
}

#[test]
fn coxeter_and_garside() {
    let mut c = ptr::null_mut();
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(toric_coxeter_new(2, 3, 7, &mut c), ToricStatus::Ok);
        let w = CString::new("r2 r1 r2 r1").unwrap();
        assert_eq!(toric_coxeter_nf(c, w.as_ptr(), &mut out), ToricStatus::Ok);
        assert_eq!(take(out), "1");
        let w = CString::new("r3 r2 r3").unwrap();
        assert_eq!(toric_coxeter_nf(c, w.as_ptr(), &mut out), ToricStatus::Ok);
        assert_eq!(take(out), "r2 r3 r2");
        toric_coxeter_free(c);

        assert_eq!(toric_coxeter_new(0, 0, 0, &mut c), ToricStatus::Ok);
        let w = CString::new("r1 r2 r1 r2").unwrap();
        assert_eq!(toric_coxeter_nf(c, w.as_ptr(), &mut out), ToricStatus::Ok);
        assert_eq!(take(out), "r1 r2 r1 r2");
        toric_coxeter_free(c);

        let w = CString::new("x^2 y^-3 x").unwrap();
        assert_eq!(toric_garside_nf(2, 3, w.as_ptr(), &mut out), ToricStatus::Ok);
        assert_eq!(take(out), "D^0 · x^1");
        assert_eq!(
            toric_garside_nf(2, 4, w.as_ptr(), &mut out),
            ToricStatus::InvalidArgument
        );
    }
}

#[test]
fn classify_json() {
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(toric_classify_json(4, 2, 3, 100_000, &mut out), ToricStatus::Ok);
    }
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["order"], 96);
    assert_eq!(v["shephard_todd"], "G8");
    assert_eq!(v["invariants"]["k"], 4);
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/toric.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 14);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}
