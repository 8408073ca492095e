//! C ABI over `antipodal_core`.
//!
//! Conventions:
//! - Every fallible function returns an [`ApStatus`]; results go through out-pointers.
//! - On failure, [`ap_last_error_message`] describes the error for the calling thread.
//! - Handles are opaque and released with their matching `*_free` function.
//! - Strings returned by the library are NUL-terminated UTF-8 and released with [`ap_string_free`].
//! - Panics are caught at the boundary and reported as [`ApStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use antipodal_core::checks::{self, CheckParams};
use antipodal_core::covers::{self, Cover};
use antipodal_core::cw::CwComplex;
use antipodal_core::{betti_profile, deleted_square, orbit_complex, skeleton_complex, top_homology_vanishes};
use antipodal_core::{Error, OrbitCell, ProductCell};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    InvalidJson = 4,
    UnknownCheck = 5,
    Infeasible = 6,
    BufferTooSmall = 7,
    Io = 8,
    Panic = 9,
}

/// A deleted square or its orbit complex.
pub struct ApComplex(ComplexKind);

enum ComplexKind {
    Square(CwComplex<ProductCell>),
    Orbit(CwComplex<OrbitCell>),
}

macro_rules! with_complex {
    ($c:expr, $x:ident => $body:expr) => {
        match &$c.0 {
            ComplexKind::Square($x) => $body,
            ComplexKind::Orbit($x) => $body,
        }
    };
}

/// A cover of a sphere by open sets.
pub struct ApCover(Cover);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(ApStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Json(_) => ApStatus::InvalidJson,
            Error::UnknownCheck(_) => ApStatus::UnknownCheck,
            Error::InfeasibleSize(_) => ApStatus::Infeasible,
            Error::Io(_) => ApStatus::Io,
            _ => ApStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure(ApStatus::InvalidJson, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ApStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ApStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(&format!("panic: {msg}"));
            ApStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(ApStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|e| Failure(ApStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON contains no NUL bytes").into_raw()
}

/// Message for the most recent failure on this thread, or null if there was none.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ap_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ap_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ap_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Minimal multiplicity of an antipodal-free open cover of S^h.
#[no_mangle]
pub extern "C" fn ap_q_of(h: usize) -> usize {
    checks::q_of(h)
}

/// Minimal number of sets in an antipodal-free open cover of S^h of multiplicity `ap_q_of(h)` (h >= 1).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ap_min_vertices(h: usize, out: *mut usize) -> ApStatus {
    guard(|| write(out, checks::min_vertices(h)?, "out"))
}

fn build_complex(n_vertices: usize, k: usize, orbit: bool) -> Result<ApComplex, Failure> {
    let d = deleted_square(&skeleton_complex(n_vertices, k)?);
    Ok(ApComplex(if orbit { ComplexKind::Orbit(orbit_complex(&d)?) } else { ComplexKind::Square(d) }))
}

/// Builds the deleted square of the k-skeleton of the simplex on `n_vertices` vertices.
///
/// # Safety
/// `out` must be valid for writes. The handle is released with [`ap_complex_free`].
#[no_mangle]
pub unsafe extern "C" fn ap_deleted_square_new(n_vertices: usize, k: usize, out: *mut *mut ApComplex) -> ApStatus {
    guard(|| write(out, Box::into_raw(Box::new(build_complex(n_vertices, k, false)?)), "out"))
}

/// Builds the orbit complex of the deleted square under the swap involution.
///
/// # Safety
/// `out` must be valid for writes. The handle is released with [`ap_complex_free`].
#[no_mangle]
pub unsafe extern "C" fn ap_orbit_complex_new(n_vertices: usize, k: usize, out: *mut *mut ApComplex) -> ApStatus {
    guard(|| write(out, Box::into_raw(Box::new(build_complex(n_vertices, k, true)?)), "out"))
}

/// Releases a complex. Null is ignored.
///
/// # Safety
/// `c` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ap_complex_free(c: *mut ApComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Top dimension, or -1 for the empty complex.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ap_complex_dim(c: *const ApComplex, out: *mut isize) -> ApStatus {
    guard(|| {
        let c = deref(c, "complex")?;
        let dim = with_complex!(c, x => x.dim());
        write(out, dim.map_or(-1, |d| d as isize), "out")
    })
}

/// Number of cells of dimension `d` (0 above the top dimension).
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ap_complex_cell_count(c: *const ApComplex, d: usize, out: *mut usize) -> ApStatus {
    guard(|| {
        let c = deref(c, "complex")?;
        write(out, with_complex!(c, x => x.cell_count(d)), "out")
    })
}

/// Euler characteristic.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ap_complex_euler(c: *const ApComplex, out: *mut i64) -> ApStatus {
    guard(|| {
        let c = deref(c, "complex")?;
        write(out, with_complex!(c, x => x.euler_characteristic()), "out")
    })
}

/// Mod-2 Betti numbers b_0..b_top.
///
/// `len` is the capacity of `out`. `written` always receives the number of entries needed; when
/// it exceeds `len` nothing is copied and [`ApStatus::BufferTooSmall`] is returned.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for `len` writes (may be null if `len` is 0);
/// `written` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ap_complex_betti(
    c: *const ApComplex,
    out: *mut usize,
    len: usize,
    written: *mut usize,
) -> ApStatus {
    guard(|| {
        let c = deref(c, "complex")?;
        let betti = with_complex!(c, x => betti_profile(x)).betti;
        write(written, betti.len(), "written")?;
        if betti.len() > len {
            return Err(Failure(ApStatus::BufferTooSmall, format!("need {} entries, got {len}", betti.len())));
        }
        if !betti.is_empty() {
            if out.is_null() {
                return Err(null("out"));
            }
            ptr::copy_nonoverlapping(betti.as_ptr(), out, betti.len());
        }
        Ok(())
    })
}

/// Whether top-dimensional mod-2 homology is zero (true for the empty complex).
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ap_complex_top_homology_vanishes(c: *const ApComplex, out: *mut bool) -> ApStatus {
    guard(|| {
        let c = deref(c, "complex")?;
        write(out, with_complex!(c, x => top_homology_vanishes(x)), "out")
    })
}

/// Cell listing as JSON (cells with labels and boundaries).
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for writes. Free the string with [`ap_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ap_complex_listing_json(c: *const ApComplex, out: *mut *mut c_char) -> ApStatus {
    guard(|| {
        let c = deref(c, "complex")?;
        let text = serde_json::to_string(&with_complex!(c, x => x.to_listing()))?;
        write(out, into_c_string(text), "out")
    })
}

unsafe fn new_cover(out: *mut *mut ApCover, cover: Cover) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(ApCover(cover))), "out")
}

/// Cap cover of S^h by h + 2 open caps.
///
/// # Safety
/// `out` must be valid for writes. The handle is released with [`ap_cover_free`].
#[no_mangle]
pub unsafe extern "C" fn ap_cover_caps(h: usize, out: *mut *mut ApCover) -> ApStatus {
    guard(|| new_cover(out, covers::cap_cover(h)?))
}

/// Cover of S^h obtained by lifting the circle cover h - 1 times with band parameter `epsilon`.
///
/// # Safety
/// `out` must be valid for writes. The handle is released with [`ap_cover_free`].
#[no_mangle]
pub unsafe extern "C" fn ap_cover_lifted(h: usize, epsilon: f64, out: *mut *mut ApCover) -> ApStatus {
    guard(|| new_cover(out, covers::lifted_cap_cover(h, epsilon)?))
}

/// Lifts `base` from S^h to S^(h+1).
///
/// # Safety
/// `base` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ap_cover_lift(base: *const ApCover, epsilon: f64, out: *mut *mut ApCover) -> ApStatus {
    guard(|| {
        let base = deref(base, "base")?;
        new_cover(out, covers::lift_cover(&base.0, epsilon)?)
    })
}

/// Parses and validates a cover document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ap_cover_from_json(json: *const c_char, out: *mut *mut ApCover) -> ApStatus {
    guard(|| new_cover(out, Cover::from_json(read_str(json, "json")?)?))
}

/// Serializes a cover to pretty-printed JSON.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for writes. Free the string with [`ap_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ap_cover_to_json(c: *const ApCover, out: *mut *mut c_char) -> ApStatus {
    guard(|| {
        let c = deref(c, "cover")?;
        write(out, into_c_string(c.0.to_json()), "out")
    })
}

/// Dimension h of the covered sphere S^h.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ap_cover_sphere_dim(c: *const ApCover, out: *mut usize) -> ApStatus {
    guard(|| write(out, deref(c, "cover")?.0.sphere_dim, "out"))
}

/// Number of sets in the cover.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ap_cover_set_count(c: *const ApCover, out: *mut usize) -> ApStatus {
    guard(|| write(out, deref(c, "cover")?.0.sets.len(), "out"))
}

/// Samples `samples` antipodal pairs with `seed` and writes the verification report as JSON.
///
/// `pass` receives whether the samples are covered with no antipodal pair inside one set.
///
/// # Safety
/// `c` must be a live handle; `report` and `pass` must be valid for writes. `report` may be null
/// to skip the JSON.
#[no_mangle]
pub unsafe extern "C" fn ap_cover_verify(
    c: *const ApCover,
    samples: usize,
    seed: u64,
    report: *mut *mut c_char,
    pass: *mut bool,
) -> ApStatus {
    guard(|| {
        let c = deref(c, "cover")?;
        let r = covers::verify_cover(&c.0, &covers::sample_sphere(c.0.sphere_dim, samples, seed)?)?;
        write(pass, r.covered && r.antipodal_free, "pass")?;
        if !report.is_null() {
            report.write(into_c_string(serde_json::to_string(&r)?));
        }
        Ok(())
    })
}

/// Releases a cover. Null is ignored.
///
/// # Safety
/// `c` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ap_cover_free(c: *mut ApCover) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Runs a named check. `params_json` is a JSON object of parameters, or null for defaults.
///
/// `out` receives the full check result as JSON and `passed` its verdict.
///
/// # Safety
/// `id` must be a NUL-terminated string; `params_json` null or NUL-terminated; `out` and
/// `passed` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ap_run_check_json(
    id: *const c_char,
    params_json: *const c_char,
    out: *mut *mut c_char,
    passed: *mut bool,
) -> ApStatus {
    guard(|| {
        let id = read_str(id, "id")?;
        let params: CheckParams = if params_json.is_null() {
            CheckParams::default()
        } else {
            serde_json::from_str(read_str(params_json, "params_json")?)?
        };
        let check = checks::run_check(id, &params)?;
        if out.is_null() || passed.is_null() {
            return Err(null("out"));
        }
        passed.write(check.passed());
        out.write(into_c_string(serde_json::to_string(&check)?));
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_reports_panics() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, ApStatus::Panic);
        let msg = unsafe { CStr::from_ptr(ap_last_error_message()) }.to_str().unwrap();
        assert_eq!(msg, "panic: boom");
    }

    #[test]
    fn error_kinds_map_to_statuses() {
        let f = Failure::from(Error::UnknownCheck("x".into()));
        assert_eq!(f.0, ApStatus::UnknownCheck);
        assert_eq!(Failure::from(Error::InfeasibleSize("x".into())).0, ApStatus::Infeasible);
        assert_eq!(Failure::from(Error::EpsilonOutOfRange(1.0)).0, ApStatus::InvalidArgument);
    }

    #[test]
    fn interior_nul_in_message_is_replaced() {
        set_last_error("a\0b");
        let msg = unsafe { CStr::from_ptr(ap_last_error_message()) }.to_str().unwrap();
        assert_eq!(msg, "a b");
    }
}
