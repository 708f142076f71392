//! Exercises the C entry points from Rust: handle lifecycle, status codes,
//! and JSON payloads.

use std::ffi::{CStr, CString};
use std::ptr;

use paraq_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(paraq_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn verify_round_trip() {
    let spin = cstr("1");
    let delta = cstr("1/3");
    let mut report: *mut ParaqReport = ptr::null_mut();
    let status = unsafe { paraq_verify(spin.as_ptr(), 2, delta.as_ptr(), &mut report) };
    assert_eq!(status, ParaqStatus::ParaqOk);
    assert!(!report.is_null());

    unsafe {
        assert_eq!(paraq_report_passed(report), 1);
        assert!(paraq_report_check_count(report) > 10);
        let json = paraq_report_json(report);
        assert!(!json.is_null());
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(doc["artifact_version"].is_string());
        assert!(doc["checks"].as_array().unwrap().len() > 10);
        paraq_string_free(json);
        paraq_report_free(report);
    }
}

#[test]
fn error_codes() {
    let spin = cstr("1/2");
    let delta = cstr("1/2");
    let garbage = cstr("x/y");
    let mut report: *mut ParaqReport = ptr::null_mut();
    unsafe {
        assert_eq!(
            paraq_verify(ptr::null(), 1, delta.as_ptr(), &mut report),
            ParaqStatus::ParaqNullArgument
        );
        assert_eq!(
            paraq_verify(spin.as_ptr(), 1, delta.as_ptr(), ptr::null_mut()),
            ParaqStatus::ParaqNullArgument
        );
        assert_eq!(
            paraq_verify(garbage.as_ptr(), 1, delta.as_ptr(), &mut report),
            ParaqStatus::ParaqInvalidArgument
        );
        assert_eq!(
            paraq_verify(spin.as_ptr(), -3, delta.as_ptr(), &mut report),
            ParaqStatus::ParaqInvalidArgument
        );
        // null-tolerant accessors
        assert_eq!(paraq_report_passed(ptr::null()), -1);
        assert_eq!(paraq_report_check_count(ptr::null()), -1);
        assert!(paraq_report_json(ptr::null()).is_null());
        paraq_report_free(ptr::null_mut());
        paraq_string_free(ptr::null_mut());
    }
}

#[test]
fn rmatrix_and_limits_reports() {
    let spin = cstr("1/2");
    let delta = cstr("1/2");
    let mut report: *mut ParaqReport = ptr::null_mut();
    unsafe {
        assert_eq!(
            paraq_rmatrix(spin.as_ptr(), delta.as_ptr(), &mut report),
            ParaqStatus::ParaqOk
        );
        assert_eq!(paraq_report_passed(report), 1);
        paraq_report_free(report);

        assert_eq!(paraq_limits(3, &mut report), ParaqStatus::ParaqOk);
        assert_eq!(paraq_report_passed(report), 1);
        paraq_report_free(report);

        assert_eq!(
            paraq_limits(-1, &mut report),
            ParaqStatus::ParaqInvalidArgument
        );
    }
}

#[test]
fn cbh_reports_failures_as_data() {
    let d1 = cstr("1/2");
    let d2 = cstr("1/3");
    let mut report: *mut ParaqReport = ptr::null_mut();
    unsafe {
        // (1,1) holds
        assert_eq!(
            paraq_cbh(1, 1, d1.as_ptr(), d2.as_ptr(), &mut report),
            ParaqStatus::ParaqOk
        );
        assert_eq!(paraq_report_passed(report), 1);
        paraq_report_free(report);
        // (3,1) fails, but that is report data, not an error code
        assert_eq!(
            paraq_cbh(3, 1, d1.as_ptr(), d2.as_ptr(), &mut report),
            ParaqStatus::ParaqOk
        );
        assert_eq!(paraq_report_passed(report), 0);
        paraq_report_free(report);
    }
}

#[test]
fn two_param_hopf_report() {
    let spin = cstr("1/2");
    let d1 = cstr("1/2");
    let d2 = cstr("1/3");
    let mut report: *mut ParaqReport = ptr::null_mut();
    unsafe {
        assert_eq!(
            paraq_two_param_hopf(spin.as_ptr(), 1, 0, d1.as_ptr(), d2.as_ptr(), &mut report),
            ParaqStatus::ParaqOk
        );
        assert_eq!(paraq_report_passed(report), 1);
        paraq_report_free(report);
    }
}

#[test]
fn psi_json() {
    unsafe {
        let s = paraq_psi_json(2);
        assert!(!s.is_null());
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        let polys: Vec<String> = serde_json::from_str(&text).unwrap();
        assert_eq!(polys[0], "H");
        assert_eq!(polys[1], "(H^3 - H)/6");
        assert_eq!(polys[2], "(3*H^5 - 10*H^3 + 7*H)/360");
        paraq_string_free(s);
        assert!(paraq_psi_json(-1).is_null());
    }
}
