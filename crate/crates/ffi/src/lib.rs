//! C interface to `kncurves`.
//!
//! Coordinates and triangle coordinates cross the boundary as opaque
//! handles owned by the caller and released with the matching `_free`
//! function. Every fallible call returns a [`KnStatus`]; the message for the
//! most recent failure on the calling thread is available from
//! [`kn_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kncurves::intersect::{intersect_elementary, ElementaryCurve};
use kncurves::{
    coordinatize, format_coords, invert, parse_coords, parse_coords_any, validate,
    DynnikovCoordinates, Error, TriangleCoordinates,
};

/// Status codes. Values 1 to 14 match the library's error kinds.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnStatus {
    Ok = 0,
    InvalidSurface = 1,
    ZeroVector = 2,
    DimensionMismatch = 3,
    Syntax = 4,
    ParityViolation = 5,
    InconsistentTriangle = 6,
    Unrealizable = 7,
    EndpointMismatch = 8,
    Range = 9,
    Parameter = 10,
    UnsupportedCurve = 11,
    NonprimitiveContent = 12,
    Overflow = 13,
    NotEmbedded = 14,
    NullPointer = 100,
    InvalidUtf8 = 101,
    BufferSize = 102,
    Panic = 103,
}

impl From<&Error> for KnStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidSurface(_) => KnStatus::InvalidSurface,
            Error::ZeroVector => KnStatus::ZeroVector,
            Error::DimensionMismatch(_) => KnStatus::DimensionMismatch,
            Error::Syntax { .. } => KnStatus::Syntax,
            Error::ParityViolation(_) => KnStatus::ParityViolation,
            Error::InconsistentTriangle(_) => KnStatus::InconsistentTriangle,
            Error::Unrealizable(_) => KnStatus::Unrealizable,
            Error::EndpointMismatch { .. } => KnStatus::EndpointMismatch,
            Error::Range(_) => KnStatus::Range,
            Error::Parameter(_) => KnStatus::Parameter,
            Error::UnsupportedCurve(_) => KnStatus::UnsupportedCurve,
            Error::NonprimitiveContent => KnStatus::NonprimitiveContent,
            Error::Overflow => KnStatus::Overflow,
            Error::NotEmbedded(_) => KnStatus::NotEmbedded,
        }
    }
}

/// Dynnikov coordinates `(a; b; t; c)`.
pub struct KnCoords(DynnikovCoordinates);

/// Triangle coordinates `(alpha; beta; gamma; c)`.
pub struct KnTriangle(TriangleCoordinates);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: KnStatus, msg: &str) -> KnStatus {
    set_error(msg);
    status
}

fn fail_with(e: &Error) -> KnStatus {
    fail(KnStatus::from(e), &e.to_string())
}

fn guard(f: impl FnOnce() -> KnStatus) -> KnStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(KnStatus::Panic, "internal panic"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, KnStatus> {
    if s.is_null() {
        return Err(fail(KnStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(KnStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn emit<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

macro_rules! non_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            return fail(KnStatus::NullPointer, "null pointer argument");
        }
    };
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn kn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses the canonical text form. Pass `n = 0` to infer `n` from `b`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kn_coords_parse(
    text: *const c_char,
    n: usize,
    out: *mut *mut KnCoords,
) -> KnStatus {
    guard(|| {
        non_null!(out);
        let s = match read_str(text) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let parsed = if n == 0 {
            parse_coords_any(s)
        } else {
            parse_coords(s, n)
        };
        match parsed.and_then(|v| validate(&v)) {
            Ok(v) => {
                emit(out, KnCoords(v.into_inner()));
                KnStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// Builds coordinates from `n - 1` entries of `a` and `n` entries of `b`.
///
/// # Safety
/// `a` and `b` must point to that many readable integers and `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn kn_coords_new(
    n: usize,
    a: *const i64,
    b: *const i64,
    t: i64,
    c1: i64,
    c2: i64,
    out: *mut *mut KnCoords,
) -> KnStatus {
    guard(|| {
        non_null!(a, b, out);
        if n < 2 {
            return fail_with(&Error::InvalidSurface(n));
        }
        let a = std::slice::from_raw_parts(a, n - 1).to_vec();
        let b = std::slice::from_raw_parts(b, n).to_vec();
        match validate(&DynnikovCoordinates::new(n, a, b, t, [c1, c2])) {
            Ok(v) => {
                emit(out, KnCoords(v.into_inner()));
                KnStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// # Safety
/// `coords` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn kn_coords_free(coords: *mut KnCoords) {
    if !coords.is_null() {
        drop(Box::from_raw(coords));
    }
}

/// Number of punctures, or 0 for a null handle.
///
/// # Safety
/// `coords` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kn_coords_n(coords: *const KnCoords) -> usize {
    coords.as_ref().map_or(0, |c| c.0.n)
}

/// Canonical text form, to be released with [`kn_string_free`]. Null on a
/// null handle.
///
/// # Safety
/// `coords` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kn_coords_format(coords: *const KnCoords) -> *mut c_char {
    match coords.as_ref() {
        Some(c) => CString::new(format_coords(&c.0)).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must come from [`kn_coords_format`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn kn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Triangle coordinates of the multicurve.
///
/// # Safety
/// `coords` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kn_invert(coords: *const KnCoords, out: *mut *mut KnTriangle) -> KnStatus {
    guard(|| {
        non_null!(coords, out);
        match invert(&(*coords).0) {
            Ok(tri) => {
                emit(out, KnTriangle(tri));
                KnStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// Builds triangle coordinates from `2n - 2` entries of `alpha` and `n + 1`
/// entries of `beta`, checking their shape and parity.
///
/// # Safety
/// `alpha` and `beta` must point to that many readable integers and `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn kn_triangle_new(
    n: usize,
    alpha: *const i64,
    beta: *const i64,
    gamma: i64,
    c1: i64,
    c2: i64,
    out: *mut *mut KnTriangle,
) -> KnStatus {
    guard(|| {
        non_null!(alpha, beta, out);
        if n < 2 {
            return fail_with(&Error::InvalidSurface(n));
        }
        let tri = TriangleCoordinates {
            n,
            alpha: std::slice::from_raw_parts(alpha, 2 * n - 2).to_vec(),
            beta: std::slice::from_raw_parts(beta, n + 1).to_vec(),
            gamma,
            c: [c1, c2],
        };
        match tri.check_shape() {
            Ok(()) => {
                emit(out, KnTriangle(tri));
                KnStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// # Safety
/// `tri` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn kn_triangle_free(tri: *mut KnTriangle) {
    if !tri.is_null() {
        drop(Box::from_raw(tri));
    }
}

/// Number of punctures, or 0 for a null handle.
///
/// # Safety
/// `tri` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kn_triangle_n(tri: *const KnTriangle) -> usize {
    tri.as_ref().map_or(0, |t| t.0.n)
}

unsafe fn copy_out(src: &[i64], out: *mut i64, len: usize) -> KnStatus {
    if out.is_null() {
        return fail(KnStatus::NullPointer, "null output buffer");
    }
    if len != src.len() {
        return fail(
            KnStatus::BufferSize,
            &format!("buffer holds {len} entries, need {}", src.len()),
        );
    }
    ptr::copy_nonoverlapping(src.as_ptr(), out, len);
    KnStatus::Ok
}

/// Copies `alpha` (length `2n - 2`) into `out`.
///
/// # Safety
/// `tri` must be a live handle and `out` must hold `len` integers.
#[no_mangle]
pub unsafe extern "C" fn kn_triangle_alpha(
    tri: *const KnTriangle,
    out: *mut i64,
    len: usize,
) -> KnStatus {
    non_null!(tri);
    copy_out(&(*tri).0.alpha, out, len)
}

/// Copies `beta` (length `n + 1`) into `out`.
///
/// # Safety
/// `tri` must be a live handle and `out` must hold `len` integers.
#[no_mangle]
pub unsafe extern "C" fn kn_triangle_beta(
    tri: *const KnTriangle,
    out: *mut i64,
    len: usize,
) -> KnStatus {
    non_null!(tri);
    copy_out(&(*tri).0.beta, out, len)
}

/// Writes `gamma`, `c1` and `c2`; any output pointer may be null.
///
/// # Safety
/// `tri` must be a live handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn kn_triangle_scalars(
    tri: *const KnTriangle,
    gamma: *mut i64,
    c1: *mut i64,
    c2: *mut i64,
) -> KnStatus {
    non_null!(tri);
    let t = &(*tri).0;
    for (p, v) in [(gamma, t.gamma), (c1, t.c[0]), (c2, t.c[1])] {
        if !p.is_null() {
            *p = v;
        }
    }
    KnStatus::Ok
}

/// Dynnikov coordinates of a triangle-coordinate vector.
///
/// # Safety
/// `tri` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kn_coordinatize(
    tri: *const KnTriangle,
    out: *mut *mut KnCoords,
) -> KnStatus {
    guard(|| {
        non_null!(tri, out);
        match coordinatize(&(*tri).0) {
            Ok(v) => {
                emit(out, KnCoords(v));
                KnStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// Intersection number with an elementary curve named as in the CLI, for
/// example `"Cij:1,2"`, `"Cprime2:2"`, `"C"` or `"D"`.
///
/// # Safety
/// `coords` must be a live handle, `curve` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kn_intersect(
    coords: *const KnCoords,
    curve: *const c_char,
    out: *mut i64,
) -> KnStatus {
    guard(|| {
        non_null!(coords, out);
        let name = match read_str(curve) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let value = name
            .parse::<ElementaryCurve>()
            .and_then(|c| intersect_elementary(&(*coords).0, c));
        match value {
            Ok(v) => {
                *out = v;
                KnStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}
