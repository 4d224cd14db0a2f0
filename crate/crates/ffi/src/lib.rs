//! C ABI over `toric-core`.
//!
//! Objects are opaque handles created by `*_new` and released by `*_free`.
//! Every fallible call returns a [`ToricStatus`]; on failure the message is
//! available from [`toric_last_error`] on the same thread. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`toric_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use toric_core::cli::{classify, RunConfig};
use toric_core::cosets::{CayleyTable, CosetError, EnumOptions};
use toric_core::coxeter::CoxeterSystem;
use toric_core::garside;
use toric_core::presentations::{build, Family, FamilyParams, Presentation};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToricStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    /// The computation hit its bound; the answer is unknown.
    Unknown = 4,
    Internal = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: ToricStatus, msg: impl std::fmt::Display) -> ToricStatus {
    set_error(msg.to_string());
    status
}

fn guard(f: impl FnOnce() -> ToricStatus) -> ToricStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(ToricStatus::Internal, "panic inside toric-core"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, ToricStatus> {
    if s.is_null() {
        return Err(fail(ToricStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(ToricStatus::Parse, "string argument is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> ToricStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            ToricStatus::Ok
        }
        Err(_) => fail(ToricStatus::Internal, "result contains a NUL byte"),
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn toric_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn toric_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

pub struct ToricPresentation {
    inner: Presentation,
}

/// Builds a presentation from a family tag (`toric`, `coxeter-triangle`, …)
/// and its integer parameters.
#[no_mangle]
pub unsafe extern "C" fn toric_presentation_new(
    family: *const c_char,
    params: *const u32,
    len: usize,
    out: *mut *mut ToricPresentation,
) -> ToricStatus {
    guard(|| {
        if out.is_null() || (params.is_null() && len > 0) {
            return fail(ToricStatus::NullPointer, "null argument");
        }
        let tag = match read_str(family) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let Some(f) = Family::from_tag(tag) else {
            return fail(ToricStatus::InvalidArgument, format!("unknown family {tag:?}"));
        };
        let values = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(params, len)
        };
        match FamilyParams::new(f, values).and_then(|fp| build(&fp)) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(ToricPresentation { inner: p }));
                ToricStatus::Ok
            }
            Err(e) => fail(ToricStatus::InvalidArgument, e),
        }
    })
}

/// Parses the text format (`gens:` / `rel:` lines).
#[no_mangle]
pub unsafe extern "C" fn toric_presentation_parse(
    text: *const c_char,
    out: *mut *mut ToricPresentation,
) -> ToricStatus {
    guard(|| {
        if out.is_null() {
            return fail(ToricStatus::NullPointer, "null out pointer");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Presentation::parse(text) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(ToricPresentation { inner: p }));
                ToricStatus::Ok
            }
            Err(e) => fail(ToricStatus::Parse, e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn toric_presentation_to_string(
    p: *const ToricPresentation,
    out: *mut *mut c_char,
) -> ToricStatus {
    guard(|| {
        if p.is_null() || out.is_null() {
            return fail(ToricStatus::NullPointer, "null argument");
        }
        write_string(out, (*p).inner.serialize())
    })
}

#[no_mangle]
pub unsafe extern "C" fn toric_presentation_free(p: *mut ToricPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

pub struct ToricCayley {
    table: CayleyTable,
    presentation: Presentation,
}

/// Enumerates the group of `p`. Returns `Unknown` if the enumeration
/// exceeds `max_cosets`.
#[no_mangle]
pub unsafe extern "C" fn toric_cayley_new(
    p: *const ToricPresentation,
    max_cosets: usize,
    out: *mut *mut ToricCayley,
) -> ToricStatus {
    guard(|| {
        if p.is_null() || out.is_null() {
            return fail(ToricStatus::NullPointer, "null argument");
        }
        let pres = &(*p).inner;
        match CayleyTable::from_presentation(pres, EnumOptions::bounded(max_cosets)) {
            Ok(table) => {
                *out = Box::into_raw(Box::new(ToricCayley {
                    table,
                    presentation: pres.clone(),
                }));
                ToricStatus::Ok
            }
            Err(e @ CosetError::Incomplete { .. }) => fail(ToricStatus::Unknown, e),
            Err(e) => fail(ToricStatus::InvalidArgument, e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn toric_cayley_order(c: *const ToricCayley) -> usize {
    if c.is_null() {
        return 0;
    }
    (*c).table.order()
}

/// Writes 1 to `out` if `word` is trivial in the group, 0 otherwise.
#[no_mangle]
pub unsafe extern "C" fn toric_cayley_is_identity(
    c: *const ToricCayley,
    word: *const c_char,
    out: *mut i32,
) -> ToricStatus {
    guard(|| {
        if c.is_null() || out.is_null() {
            return fail(ToricStatus::NullPointer, "null argument");
        }
        let text = match read_str(word) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let c = &*c;
        match c.presentation.parse_word(text) {
            Ok(w) => {
                *out = i32::from(c.table.element(&w) == c.table.identity());
                ToricStatus::Ok
            }
            Err(e) => fail(ToricStatus::Parse, e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn toric_cayley_free(c: *mut ToricCayley) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

pub struct ToricCoxeter {
    system: CoxeterSystem,
}

/// The triangle Coxeter group with `m(r1,r2) = k`, `m(r2,r3) = n`,
/// `m(r3,r1) = m`; a label of 0 means infinity.
#[no_mangle]
pub unsafe extern "C" fn toric_coxeter_new(k: u32, n: u32, m: u32, out: *mut *mut ToricCoxeter) -> ToricStatus {
    guard(|| {
        if out.is_null() {
            return fail(ToricStatus::NullPointer, "null out pointer");
        }
        match CoxeterSystem::triangle(k, n, m) {
            Ok(system) => {
                *out = Box::into_raw(Box::new(ToricCoxeter { system }));
                ToricStatus::Ok
            }
            Err(e) => fail(ToricStatus::InvalidArgument, e),
        }
    })
}

/// ShortLex normal form of a word over `r1 r2 r3`.
#[no_mangle]
pub unsafe extern "C" fn toric_coxeter_nf(
    c: *const ToricCoxeter,
    word: *const c_char,
    out: *mut *mut c_char,
) -> ToricStatus {
    guard(|| {
        if c.is_null() || out.is_null() {
            return fail(ToricStatus::NullPointer, "null argument");
        }
        let text = match read_str(word) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let sys = &(*c).system;
        let alphabet = sys.matrix().alphabet();
        let w = match alphabet.parse(text) {
            Ok(w) => w,
            Err(e) => return fail(ToricStatus::Parse, e),
        };
        match sys.nf(&w) {
            Ok(nf) => write_string(out, alphabet.render(&nf)),
            Err(e) => fail(ToricStatus::Internal, e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn toric_coxeter_free(c: *mut ToricCoxeter) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Garside normal form in `<x, y | x^n = y^m>`, rendered as
/// `D^p · x^i | y^j | ...`.
#[no_mangle]
pub unsafe extern "C" fn toric_garside_nf(n: u32, m: u32, word: *const c_char, out: *mut *mut c_char) -> ToricStatus {
    guard(|| {
        if out.is_null() {
            return fail(ToricStatus::NullPointer, "null out pointer");
        }
        let text = match read_str(word) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let w = match garside::alphabet().parse(text) {
            Ok(w) => w,
            Err(e) => return fail(ToricStatus::Parse, e),
        };
        match garside::gnf(n, m, &w) {
            Ok(nf) => write_string(out, nf.to_string()),
            Err(e) => fail(ToricStatus::InvalidArgument, e),
        }
    })
}

/// Classification of `W(k, n, m)` as a JSON object.
#[no_mangle]
pub unsafe extern "C" fn toric_classify_json(
    k: u32,
    n: u32,
    m: u32,
    max_cosets: usize,
    out: *mut *mut c_char,
) -> ToricStatus {
    guard(|| {
        if out.is_null() {
            return fail(ToricStatus::NullPointer, "null out pointer");
        }
        let cfg = RunConfig {
            max_cosets,
            ..RunConfig::default()
        };
        match classify(k, n, m, &cfg) {
            Ok(c) => match serde_json::to_string(&c) {
                Ok(s) => write_string(out, s),
                Err(e) => fail(ToricStatus::Internal, e),
            },
            Err(e) => fail(ToricStatus::InvalidArgument, e),
        }
    })
}
