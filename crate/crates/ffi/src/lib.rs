//! C ABI for the matroid-verify library.
//!
//! Matroids are handed out as opaque `MvMatroid` pointers. Every function
//! returns an `MvStatus`; on any non-`Ok` status a description is available
//! from `mv_last_error_message` (thread-local). Strings returned through
//! out-parameters are owned by the caller and must be released with
//! `mv_string_free`; matroid handles with `mv_matroid_free`.

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;

use matroid_verify::checks;
use matroid_verify::harness::{self, CheckKind, FamilyMember, RunConfig};
use matroid_verify::lorentzian::is_lorentzian;
use matroid_verify::mask::SubsetMask;
use matroid_verify::matroid::{Matroid, MatroidError};

/// Opaque matroid handle.
pub struct MvMatroid {
    inner: Matroid,
}

/// Status codes returned by every API call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MvStatus {
    MvOk = 0,
    MvNullPointer = 1,
    MvInvalidUtf8 = 2,
    MvParseError = 3,
    MvInvalidArgument = 4,
    MvAxiomViolation = 5,
    MvResourceLimit = 6,
    MvPanic = 7,
    MvInternalError = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let cstring = CString::new(message.replace('\0', "?"))
        .unwrap_or_else(|_| CString::new("invalid error message").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(cstring));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of_matroid_error(e: &MatroidError) -> MvStatus {
    match e {
        MatroidError::AxiomViolation(_) => MvStatus::MvAxiomViolation,
        MatroidError::TooLarge { .. } => MvStatus::MvResourceLimit,
        MatroidError::InvalidParameter(_) => MvStatus::MvInvalidArgument,
    }
}

/// Run `body` with panic containment and last-error bookkeeping.
fn guarded(body: impl FnOnce() -> Result<(), (MvStatus, String)>) -> MvStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => MvStatus::MvOk,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            MvStatus::MvPanic
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, (MvStatus, String)> {
    if ptr.is_null() {
        return Err((MvStatus::MvNullPointer, "null string argument".into()));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|e| (MvStatus::MvInvalidUtf8, e.to_string()))
}

unsafe fn deref_matroid<'a>(
    handle: *const MvMatroid,
) -> Result<&'a Matroid, (MvStatus, String)> {
    if handle.is_null() {
        return Err((MvStatus::MvNullPointer, "null matroid handle".into()));
    }
    Ok(&(*handle).inner)
}

fn give_matroid(out: *mut *mut MvMatroid, matroid: Matroid) -> Result<(), (MvStatus, String)> {
    if out.is_null() {
        return Err((MvStatus::MvNullPointer, "null out-parameter".into()));
    }
    let boxed = Box::new(MvMatroid { inner: matroid });
    unsafe { *out = Box::into_raw(boxed) };
    Ok(())
}

fn give_string(out: *mut *mut c_char, value: String) -> Result<(), (MvStatus, String)> {
    if out.is_null() {
        return Err((MvStatus::MvNullPointer, "null out-parameter".into()));
    }
    let cstring = CString::new(value.replace('\0', "?"))
        .map_err(|e| (MvStatus::MvInternalError, e.to_string()))?;
    unsafe { *out = cstring.into_raw() };
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn mv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Description of the most recent error on this thread, or NULL.
/// The caller owns the returned string (release with `mv_string_free`).
#[no_mangle]
pub extern "C" fn mv_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by this library and not yet
/// freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn mv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a matroid from a JSON spec document (same schema as the CLI).
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be a valid
/// pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn mv_matroid_from_spec_json(
    json: *const c_char,
    out: *mut *mut MvMatroid,
) -> MvStatus {
    guarded(|| {
        let text = read_str(json)?;
        let matroid = harness::parse_matroid_spec(text).map_err(|e| match &e {
            harness::HarnessError::Parse { .. } => (MvStatus::MvParseError, e.to_string()),
            harness::HarnessError::Matroid(me) => (status_of_matroid_error(me), e.to_string()),
            _ => (MvStatus::MvInternalError, e.to_string()),
        })?;
        give_matroid(out, matroid)
    })
}

/// Build the uniform matroid with rank `r` on `n` elements.
///
/// # Safety
/// `out` must be a valid pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn mv_matroid_uniform(
    r: u32,
    n: u32,
    out: *mut *mut MvMatroid,
) -> MvStatus {
    guarded(|| {
        let matroid = Matroid::uniform(r as usize, n as usize)
            .map_err(|e| (status_of_matroid_error(&e), e.to_string()))?;
        give_matroid(out, matroid)
    })
}

/// Release a matroid handle.
///
/// # Safety
/// `handle` must come from this library and not be freed twice; NULL is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn mv_matroid_free(handle: *mut MvMatroid) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Ground-set size of the matroid.
///
/// # Safety
/// `handle` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mv_matroid_ground_size(
    handle: *const MvMatroid,
    out: *mut u32,
) -> MvStatus {
    guarded(|| {
        let m = deref_matroid(handle)?;
        if out.is_null() {
            return Err((MvStatus::MvNullPointer, "null out-parameter".into()));
        }
        *out = m.n() as u32;
        Ok(())
    })
}

/// Human-readable descriptor of the matroid (owned by the caller).
///
/// # Safety
/// `handle` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mv_matroid_name(
    handle: *const MvMatroid,
    out: *mut *mut c_char,
) -> MvStatus {
    guarded(|| {
        let m = deref_matroid(handle)?;
        give_string(out, m.name().to_string())
    })
}

fn subset_in_range(m: &Matroid, subset: u32) -> Result<SubsetMask, (MvStatus, String)> {
    let full = SubsetMask::full(m.n());
    let mask = SubsetMask(subset);
    if !mask.is_subset_of(full) {
        return Err((
            MvStatus::MvInvalidArgument,
            format!("subset {subset:#x} has bits outside the {}-element ground set", m.n()),
        ));
    }
    Ok(mask)
}

/// Independence oracle: is the bitmask-encoded subset independent?
///
/// # Safety
/// `handle` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mv_matroid_is_independent(
    handle: *const MvMatroid,
    subset: u32,
    out: *mut bool,
) -> MvStatus {
    guarded(|| {
        let m = deref_matroid(handle)?;
        let mask = subset_in_range(m, subset)?;
        if out.is_null() {
            return Err((MvStatus::MvNullPointer, "null out-parameter".into()));
        }
        *out = m.is_independent(mask);
        Ok(())
    })
}

/// Rank of the bitmask-encoded subset.
///
/// # Safety
/// `handle` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mv_matroid_rank(
    handle: *const MvMatroid,
    subset: u32,
    out: *mut u32,
) -> MvStatus {
    guarded(|| {
        let m = deref_matroid(handle)?;
        let mask = subset_in_range(m, subset)?;
        if out.is_null() {
            return Err((MvStatus::MvNullPointer, "null out-parameter".into()));
        }
        *out = m.rank(mask) as u32;
        Ok(())
    })
}

/// Dual matroid as a fresh handle.
///
/// # Safety
/// `handle` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mv_matroid_dual(
    handle: *const MvMatroid,
    out: *mut *mut MvMatroid,
) -> MvStatus {
    guarded(|| {
        let m = deref_matroid(handle)?;
        give_matroid(out, m.dual())
    })
}

/// Whether the homogenized generating polynomial of the matroid is
/// Lorentzian (1) or not (0).
///
/// # Safety
/// `handle` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mv_matroid_g_is_lorentzian(
    handle: *const MvMatroid,
    out: *mut bool,
) -> MvStatus {
    guarded(|| {
        let m = deref_matroid(handle)?;
        if out.is_null() {
            return Err((MvStatus::MvNullPointer, "null out-parameter".into()));
        }
        *out = is_lorentzian(&checks::g_polynomial(m)).is_lorentzian;
        Ok(())
    })
}

/// Run a comma-separated list of checks (e.g. "dowling,zhao,strong") on the
/// matroid and return the JSON report (same format as the CLI).
///
/// # Safety
/// `handle` and `checks_csv` must be valid; `out_json` receives an owned
/// string.
#[no_mangle]
pub unsafe extern "C" fn mv_run_checks_json(
    handle: *const MvMatroid,
    checks_csv: *const c_char,
    out_json: *mut *mut c_char,
) -> MvStatus {
    guarded(|| {
        let m = deref_matroid(handle)?;
        let list = read_str(checks_csv)?;
        let mut kinds = BTreeSet::new();
        for token in list.split(',').filter(|t| !t.trim().is_empty()) {
            let kind: CheckKind = token
                .trim()
                .parse()
                .map_err(|e: String| (MvStatus::MvInvalidArgument, e))?;
            kinds.insert(kind);
        }
        let config = RunConfig {
            checks: kinds,
            generated_families: false,
            ..RunConfig::default()
        };
        let family = vec![FamilyMember {
            name: m.name().to_string(),
            matroid: m.clone(),
        }];
        let report = harness::run_with_family(&config, &family)
            .map_err(|e| (MvStatus::MvInternalError, e.to_string()))?;
        give_string(out_json, report.to_json())
    })
}

/// Render a polynomial of the matroid as newline-separated
/// `coeff * monomial` lines. `which` is one of `"g"`, `"collapse"`, or
/// `"fk:<k>"`.
///
/// # Safety
/// `handle` and `which` must be valid; `out` receives an owned string.
#[no_mangle]
pub unsafe extern "C" fn mv_poly_lines(
    handle: *const MvMatroid,
    which: *const c_char,
    out: *mut *mut c_char,
) -> MvStatus {
    guarded(|| {
        let m = deref_matroid(handle)?;
        let selector = read_str(which)?;
        let poly = if selector == "g" {
            checks::g_polynomial(m)
        } else if selector == "collapse" {
            checks::collapse_s(m)
        } else if let Some(k) = selector.strip_prefix("fk:") {
            let k: usize = k
                .parse()
                .map_err(|_| (MvStatus::MvInvalidArgument, format!("bad k in '{selector}'")))?;
            checks::independent_sets_poly(m, k)
        } else {
            return Err((
                MvStatus::MvInvalidArgument,
                format!("unknown polynomial selector '{selector}' (use g, collapse, or fk:<k>)"),
            ));
        };
        give_string(out, poly.to_lines().join("\n"))
    })
}
