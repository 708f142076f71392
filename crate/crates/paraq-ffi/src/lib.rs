//! C ABI over the verification engine.
//!
//! Reports are returned as opaque handles; every entry point reports a
//! [`ParaqStatus`] and writes its result through an out-pointer. Strings
//! returned by the library are heap-allocated, NUL-terminated UTF-8 and must
//! be released with [`paraq_string_free`]; reports with [`paraq_report_free`].
//! The generated header lives in `include/paraq.h`.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use paraq::cbh::check_exp_identity;
use paraq::hopf::{check_hopf_axioms, two_param_hopf};
use paraq::limits::check_limits;
use paraq::psi::psi_polynomials;
use paraq::rational::Rational;
use paraq::rep::{check_defining_relations, Spin};
use paraq::report::VerificationReport;
use paraq::rmatrix::check_rmatrix_suite;

/// Opaque verification report handle.
pub struct ParaqReport {
    inner: VerificationReport,
}

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParaqStatus {
    /// Success.
    ParaqOk = 0,
    /// A required pointer argument was NULL.
    ParaqNullArgument = 1,
    /// An argument failed to parse or was out of range.
    ParaqInvalidArgument = 2,
}

unsafe fn parse_c_str<T: std::str::FromStr>(s: *const c_char) -> Result<T, ParaqStatus> {
    if s.is_null() {
        return Err(ParaqStatus::ParaqNullArgument);
    }
    let text = CStr::from_ptr(s)
        .to_str()
        .map_err(|_| ParaqStatus::ParaqInvalidArgument)?;
    text.parse().map_err(|_| ParaqStatus::ParaqInvalidArgument)
}

fn hand_out(report: VerificationReport, out: *mut *mut ParaqReport) -> ParaqStatus {
    if out.is_null() {
        return ParaqStatus::ParaqNullArgument;
    }
    let boxed = Box::new(ParaqReport { inner: report });
    unsafe { *out = Box::into_raw(boxed) };
    ParaqStatus::ParaqOk
}

/// Library version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn paraq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Runs the defining-relation and Hopf-axiom suites for one grid point.
/// `spin` is a half-integer string like "1/2"; `delta` a rational "p/q".
///
/// # Safety
/// `spin` and `delta` must be NULL or valid NUL-terminated strings; `out`
/// must be a valid pointer to a report pointer.
#[no_mangle]
pub unsafe extern "C" fn paraq_verify(
    spin: *const c_char,
    order: i32,
    delta: *const c_char,
    out: *mut *mut ParaqReport,
) -> ParaqStatus {
    let (j, d) = match (parse_c_str::<Spin>(spin), parse_c_str::<Rational>(delta)) {
        (Ok(j), Ok(d)) => (j, d),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    if order < 0 {
        return ParaqStatus::ParaqInvalidArgument;
    }
    let mut report = check_defining_relations(j, &d, order as usize);
    report.extend(check_hopf_axioms(j, &d, order as usize));
    hand_out(report, out)
}

/// R-matrix factorization, intertwiner, and Yang-Baxter checks on (j, j).
///
/// # Safety
/// As for [`paraq_verify`].
#[no_mangle]
pub unsafe extern "C" fn paraq_rmatrix(
    spin: *const c_char,
    delta: *const c_char,
    out: *mut *mut ParaqReport,
) -> ParaqStatus {
    let (j, d) = match (parse_c_str::<Spin>(spin), parse_c_str::<Rational>(delta)) {
        (Ok(j), Ok(d)) => (j, d),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    hand_out(check_rmatrix_suite(j, &d), out)
}

/// Exponential-identity check for the two-variable composition.
///
/// # Safety
/// As for [`paraq_verify`].
#[no_mangle]
pub unsafe extern "C" fn paraq_cbh(
    order1: i32,
    order2: i32,
    delta1: *const c_char,
    delta2: *const c_char,
    out: *mut *mut ParaqReport,
) -> ParaqStatus {
    let (d1, d2) = match (
        parse_c_str::<Rational>(delta1),
        parse_c_str::<Rational>(delta2),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    if order1 < 0 || order2 < 0 {
        return ParaqStatus::ParaqInvalidArgument;
    }
    hand_out(
        check_exp_identity(&d1, &d2, order1 as usize, order2 as usize),
        out,
    )
}

/// Two-parameter Hopf-axiom battery.
///
/// # Safety
/// As for [`paraq_verify`].
#[no_mangle]
pub unsafe extern "C" fn paraq_two_param_hopf(
    spin: *const c_char,
    order1: i32,
    order2: i32,
    delta1: *const c_char,
    delta2: *const c_char,
    out: *mut *mut ParaqReport,
) -> ParaqStatus {
    let j = match parse_c_str::<Spin>(spin) {
        Ok(j) => j,
        Err(e) => return e,
    };
    let (d1, d2) = match (
        parse_c_str::<Rational>(delta1),
        parse_c_str::<Rational>(delta2),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    if order1 < 0 || order2 < 0 {
        return ParaqStatus::ParaqInvalidArgument;
    }
    hand_out(
        two_param_hopf(j, &d1, &d2, order1 as usize, order2 as usize),
        out,
    )
}

/// Unit-circle and nonlinear-limit checks at one truncation order.
///
/// # Safety
/// `out` must be a valid pointer to a report pointer.
#[no_mangle]
pub unsafe extern "C" fn paraq_limits(order: i32, out: *mut *mut ParaqReport) -> ParaqStatus {
    if order < 0 {
        return ParaqStatus::ParaqInvalidArgument;
    }
    hand_out(check_limits(order as usize), out)
}

/// 1 if every check in the report passed, 0 if any failed, -1 on NULL.
///
/// # Safety
/// `report` must be NULL or a pointer obtained from this library.
#[no_mangle]
pub unsafe extern "C" fn paraq_report_passed(report: *const ParaqReport) -> i32 {
    match report.as_ref() {
        None => -1,
        Some(r) => i32::from(r.inner.passed()),
    }
}

/// Number of checks in the report, -1 on NULL.
///
/// # Safety
/// As for [`paraq_report_passed`].
#[no_mangle]
pub unsafe extern "C" fn paraq_report_check_count(report: *const ParaqReport) -> i64 {
    match report.as_ref() {
        None => -1,
        Some(r) => r.inner.checks.len() as i64,
    }
}

/// Serializes the report document as JSON. Returns NULL on NULL input.
/// Free the result with [`paraq_string_free`].
///
/// # Safety
/// As for [`paraq_report_passed`].
#[no_mangle]
pub unsafe extern "C" fn paraq_report_json(report: *const ParaqReport) -> *mut c_char {
    match report.as_ref() {
        None => ptr::null_mut(),
        Some(r) => {
            let json = serde_json::to_string(&r.inner.to_document()).expect("serializable");
            CString::new(json).expect("no interior NUL").into_raw()
        }
    }
}

/// ψ_0 … ψ_kmax as a JSON array of polynomial strings. Free with
/// [`paraq_string_free`].
#[no_mangle]
pub extern "C" fn paraq_psi_json(kmax: i32) -> *mut c_char {
    if kmax < 0 {
        return ptr::null_mut();
    }
    let polys: Vec<String> = psi_polynomials(kmax as usize)
        .iter()
        .map(|p| p.to_string())
        .collect();
    let json = serde_json::to_string(&polys).expect("serializable");
    CString::new(json).expect("no interior NUL").into_raw()
}

/// Releases a report handle. NULL is a no-op.
///
/// # Safety
/// `report` must be NULL or a pointer obtained from this library, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn paraq_report_free(report: *mut ParaqReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn paraq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
