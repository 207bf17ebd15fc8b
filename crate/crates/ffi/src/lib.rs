//! C ABI over the `lagrange` crate.
//!
//! Polynomials and groups cross the boundary as opaque handles; results come
//! back as JSON strings owned by the library. Every entry point returns a
//! [`LagrangeStatus`]; on failure [`lagrange_last_error`] describes the error
//! for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lagrange::galois::{self, IdentifyOptions};
use lagrange::polyint::IntPoly;
use lagrange::{cli, Error, PermutationGroup};

/// Status codes returned by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LagrangeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    CapExceeded = 5,
    Precision = 6,
    Unsupported = 7,
    Computation = 8,
    Panic = 9,
}

/// An integer polynomial.
pub struct LagrangePoly(IntPoly);

/// A permutation group.
pub struct LagrangeGroup(PermutationGroup);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LagrangeStatus {
    match e {
        Error::Parse(_)
        | Error::Json(_)
        | Error::UnknownInvariant(_)
        | Error::InvalidPermutation(_) => LagrangeStatus::Parse,
        Error::NotSquarefree
        | Error::DegreeTooSmall { .. }
        | Error::NotDegree5(_)
        | Error::ReducibleInput
        | Error::DegreeMismatch(..)
        | Error::NotASubgroup(_) => LagrangeStatus::InvalidInput,
        Error::CapExceeded { .. } | Error::SizeOverflow { .. } => LagrangeStatus::CapExceeded,
        Error::NoConvergence { .. }
        | Error::PrecisionCapExceeded { .. }
        | Error::AmbiguousCluster => LagrangeStatus::Precision,
        Error::Unsupported(_) => LagrangeStatus::Unsupported,
        _ => LagrangeStatus::Computation,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (LagrangeStatus, String)>) -> LagrangeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LagrangeStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            LagrangeStatus::Panic
        }
    }
}

fn lift(e: Error) -> (LagrangeStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (LagrangeStatus, String) {
    (LagrangeStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (LagrangeStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (LagrangeStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (LagrangeStatus, String)> {
    let c = CString::new(s).map_err(|_| {
        (
            LagrangeStatus::Computation,
            "output contains NUL".to_string(),
        )
    })?;
    *out = c.into_raw();
    Ok(())
}

fn options(max_rescues: u32) -> IdentifyOptions {
    IdentifyOptions {
        max_rescues: max_rescues as usize,
        ..IdentifyOptions::default()
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn lagrange_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lagrange_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `text` (`"x^4 - 2"` or a JSON list of coefficients, constant first).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lagrange_poly_parse(
    text: *const c_char,
    out: *mut *mut LagrangePoly,
) -> LagrangeStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p: IntPoly = read_str(text, "text")?.parse().map_err(lift)?;
        *out = Box::into_raw(Box::new(LagrangePoly(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must come from [`lagrange_poly_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lagrange_poly_free(p: *mut LagrangePoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree of `p`, or -1 for the zero polynomial or a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lagrange_poly_degree(p: *const LagrangePoly) -> i64 {
    p.as_ref().map_or(-1, |p| p.0.deg())
}

/// Writes `p` in text form to `*out`; free with [`lagrange_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lagrange_poly_to_string(
    p: *const LagrangePoly,
    out: *mut *mut c_char,
) -> LagrangeStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("poly"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, p.0.to_string())
    })
}

/// Identifies the Galois group of `p`; writes the report as JSON.
///
/// # Safety
/// `p` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lagrange_identify(
    p: *const LagrangePoly,
    max_rescues: u32,
    out_json: *mut *mut c_char,
) -> LagrangeStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("poly"))?;
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        let r = galois::identify_with(&p.0, options(max_rescues)).map_err(lift)?;
        let json = serde_json::to_string(&r.to_json()).map_err(|e| lift(e.into()))?;
        write_string(out_json, json)
    })
}

/// Decides solvability by radicals of an irreducible quintic.
///
/// # Safety
/// `p` must be a live handle and `out_solvable` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lagrange_solvable(
    p: *const LagrangePoly,
    out_solvable: *mut bool,
) -> LagrangeStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("poly"))?;
        if out_solvable.is_null() {
            return Err(null("out_solvable"));
        }
        *out_solvable = galois::solvable_quintic(&p.0).map_err(lift)?.solvable;
        Ok(())
    })
}

/// Absolute resolvent of `p` by a builtin or expression invariant, as JSON.
///
/// # Safety
/// `p` must be a live handle, `invariant` NUL-terminated, `out_json` valid.
#[no_mangle]
pub unsafe extern "C" fn lagrange_resolvent(
    p: *const LagrangePoly,
    invariant: *const c_char,
    out_json: *mut *mut c_char,
) -> LagrangeStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("poly"))?;
        let inv = read_str(invariant, "invariant")?;
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        let config = cli::Config {
            output: cli::Output::Json,
            ..cli::Config::default()
        };
        let json = cli::cmd_resolvent(&p.0.to_string(), inv, None, None, &config).map_err(lift)?;
        write_string(out_json, json.trim_end().to_string())
    })
}

/// Parses a group: `S4`, `A5`, a catalog name, or `name := (1,2,3),(1,2)`.
///
/// # Safety
/// `spec` must be NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lagrange_group_parse(
    spec: *const c_char,
    out: *mut *mut LagrangeGroup,
) -> LagrangeStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let (_, g) = cli::parse_ambient(read_str(spec, "spec")?).map_err(lift)?;
        *out = Box::into_raw(Box::new(LagrangeGroup(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must come from [`lagrange_group_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lagrange_group_free(g: *mut LagrangeGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Order of `g`, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lagrange_group_order(g: *const LagrangeGroup) -> u64 {
    g.as_ref().map_or(0, |g| g.0.order() as u64)
}

/// Partition and group matrices of `g` as JSON.
///
/// # Safety
/// `g` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lagrange_matrix_json(
    g: *const LagrangeGroup,
    out_json: *mut *mut c_char,
) -> LagrangeStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("group"))?;
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        let (json, _) = cli::matrices_cached("ambient", &g.0, true, None).map_err(lift)?;
        let text = serde_json::to_string(&json).map_err(|e| lift(e.into()))?;
        write_string(out_json, text)
    })
}
