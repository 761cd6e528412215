//! C ABI for flagcalc.
//!
//! Varieties are opaque handles created with [`flagcalc_variety_new`] and
//! released with [`flagcalc_variety_free`]. Schubert classes are addressed by
//! their index in the W^P table (see [`flagcalc_find_word`]). Every fallible
//! call returns a [`FlagcalcStatus`]; on failure the message is available from
//! [`flagcalc_last_error_message`] on the same thread. Integers that may
//! overflow a machine word are returned as decimal strings, and every string
//! handed out must be released with [`flagcalc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use flagcalc::levi_rep::LeviSystem;
use flagcalc::{deformed, verify, Error, FlagVariety, GroupData};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagcalcStatus {
    Ok = 0,
    InvalidArgument = 1,
    Unsupported = 2,
    Parse = 3,
    NotInWp = 4,
    Cap = 5,
    Internal = 6,
    NullPointer = 7,
}

/// Opaque handle to a flag variety G/P.
pub struct FlagcalcVariety {
    fv: FlagVariety,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> FlagcalcStatus {
    match e {
        Error::Unsupported(_) => FlagcalcStatus::Unsupported,
        Error::Invalid(_) => FlagcalcStatus::InvalidArgument,
        Error::Parse(_) => FlagcalcStatus::Parse,
        Error::NotInWP(_) => FlagcalcStatus::NotInWp,
        Error::Cap(_) => FlagcalcStatus::Cap,
        Error::Internal(_) | Error::Io(_) | Error::Json(_) => FlagcalcStatus::Internal,
    }
}

enum Fail {
    Null(&'static str),
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

type Outcome = Result<(), Fail>;

fn guard(f: impl FnOnce() -> Outcome) -> FlagcalcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FlagcalcStatus::Ok,
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            FlagcalcStatus::NullPointer
        }
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            FlagcalcStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Core(Error::Parse(format!("{what} is not valid UTF-8"))))
}

unsafe fn slice_arg<'a, T>(p: *const T, n: usize, what: &'static str) -> Result<&'a [T], Fail> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

unsafe fn handle<'a>(h: *const FlagcalcVariety) -> Result<&'a FlagVariety, Fail> {
    h.as_ref().map(|v| &v.fv).ok_or(Fail::Null("variety"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Outcome {
    if out.is_null() {
        return Err(Fail::Null("out"));
    }
    let c = CString::new(s).map_err(|e| Error::Internal(e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn check_indices(fv: &FlagVariety, idx: &[usize]) -> Result<(), Error> {
    match idx.iter().find(|&&w| w >= fv.len()) {
        Some(w) => Err(Error::Invalid(format!("class index {w} out of range (W^P has {} elements)", fv.len()))),
        None => Ok(()),
    }
}

/// Builds G/P for `group` (e.g. "C3") with the crossed simple roots
/// `crossed[0..n_crossed]` (1-based, Bourbaki order).
///
/// # Safety
/// `group` must be a NUL-terminated string, `crossed` must point to
/// `n_crossed` readable values, and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn flagcalc_variety_new(
    group: *const c_char,
    crossed: *const usize,
    n_crossed: usize,
    out: *mut *mut FlagcalcVariety,
) -> FlagcalcStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let group = str_arg(group, "group")?;
        let crossed = slice_arg(crossed, n_crossed, "crossed")?;
        let fv = GroupData::parse(group)?.flag_variety(crossed)?;
        *out = Box::into_raw(Box::new(FlagcalcVariety { fv }));
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle from [`flagcalc_variety_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn flagcalc_variety_free(h: *mut FlagcalcVariety) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of Schubert classes, |W^P|. Zero for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn flagcalc_variety_len(h: *const FlagcalcVariety) -> usize {
    h.as_ref().map_or(0, |v| v.fv.len())
}

/// Complex dimension of G/P. Zero for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn flagcalc_variety_dimension(h: *const FlagcalcVariety) -> usize {
    h.as_ref().map_or(0, |v| v.fv.dimension())
}

/// Looks up the class index of a reduced word such as "1,3,2".
///
/// # Safety
/// `h` must be a live handle, `word` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn flagcalc_find_word(
    h: *const FlagcalcVariety,
    word: *const c_char,
    out: *mut usize,
) -> FlagcalcStatus {
    guard(|| {
        let fv = handle(h)?;
        let word = str_arg(word, "word")?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = fv.find(word)?;
        Ok(())
    })
}

/// The reduced word of class `index`; "e" for the identity.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn flagcalc_word(h: *const FlagcalcVariety, index: usize, out: *mut *mut c_char) -> FlagcalcStatus {
    guard(|| {
        let fv = handle(h)?;
        check_indices(fv, &[index])?;
        write_string(out, fv.word(index))
    })
}

/// Coefficient of the point class in the product of the classes
/// `indices[0..n]`, using the deformed product when `deformed` is set.
///
/// # Safety
/// `h` must be a live handle, `indices` must point to `n` readable values,
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn flagcalc_intersection_number(
    h: *const FlagcalcVariety,
    indices: *const usize,
    n: usize,
    deformed: bool,
    out: *mut *mut c_char,
) -> FlagcalcStatus {
    guard(|| {
        let fv = handle(h)?;
        let ws = slice_arg(indices, n, "indices")?;
        if ws.is_empty() {
            return Err(Error::Invalid("at least one class is required".into()).into());
        }
        check_indices(fv, ws)?;
        let c = if deformed {
            deformed::deformed_top_coefficient(fv, ws)?
        } else {
            fv.schubert().intersection_number(ws)?
        };
        write_string(out, c.to_string())
    })
}

/// dim of the Levi invariants of V(nχ_{w_1}) ⊗ … ⊗ V(nχ_{w_s}) for the
/// classes `indices[0..n_indices]`.
///
/// # Safety
/// `h` must be a live handle, `indices` must point to `n_indices` readable
/// values, and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn flagcalc_invariant_dimension(
    h: *const FlagcalcVariety,
    indices: *const usize,
    n_indices: usize,
    n: u32,
    out: *mut *mut c_char,
) -> FlagcalcStatus {
    guard(|| {
        let fv = handle(h)?;
        let ws = slice_arg(indices, n_indices, "indices")?;
        check_indices(fv, ws)?;
        let levi = LeviSystem::from_parabolic(fv.root_system(), fv.parabolic())?;
        let chis = ws.iter().map(|&w| fv.chi(w).cloned()).collect::<Result<Vec<_>, _>>()?;
        let d = levi.invariant_dimension(&chis, n)?;
        write_string(out, d.to_string())
    })
}

/// Runs the s-fold sweep on `jobs` threads (at least one) and returns the
/// JSON report. The tuple cap is read from FLAGCALC_TUPLE_CAP.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn flagcalc_verify_json(
    h: *const FlagcalcVariety,
    s: usize,
    n_max: u32,
    jobs: usize,
    out: *mut *mut c_char,
) -> FlagcalcStatus {
    guard(|| {
        let fv = handle(h)?;
        let report = verify::verify(fv, s, n_max, jobs, verify::tuple_cap())?;
        write_string(out, report.to_json()?)
    })
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next flagcalc call on the same thread.
#[no_mangle]
pub extern "C" fn flagcalc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn flagcalc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
