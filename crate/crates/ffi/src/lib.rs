//! C ABI for the jetbounds library.
//!
//! Bound values come back as decimal strings (they are arbitrary-precision
//! integers); witness searches and verification suites come back as opaque
//! report handles carrying the same JSON documents the CLI emits. Status
//! codes mirror the CLI exit codes: 0 ok, 1 witness absent or check failed,
//! 2 usage error, 3 desk-scale guard, plus FFI-only codes for null
//! arguments and internal faults.
//!
//! Memory rules: strings returned through `char**` out-parameters are freed
//! with [`jb_string_free`]; reports are freed with [`jb_report_free`]; the
//! pointer returned by [`jb_report_json`] borrows from the report and dies
//! with it.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use num::bigint::BigInt;

use jetbounds::bounds::{debarre_degree_bound, kobayashi_degree_bound, DebarreSearchOptions};
use jetbounds::error::Error;
use jetbounds::report::{Report, RunConfig};
use jetbounds::runner;

/// Result codes; the first four mirror the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JbStatus {
    /// Operation succeeded and every check passed.
    Ok = 0,
    /// A witness was absent or some check failed.
    Fail = 1,
    /// Invalid arguments.
    Usage = 2,
    /// Input exceeds the exact desk-scale guards.
    ScaleGuard = 3,
    /// A required pointer argument was null.
    NullArgument = 4,
    /// Unexpected internal fault.
    Internal = 5,
}

/// Opaque run report; inspect through `jb_report_pass` / `jb_report_json`.
pub struct JbReport {
    json: CString,
    pass: bool,
}

fn status_of_error(err: &Error) -> JbStatus {
    match err {
        Error::ScaleGuard(_) => JbStatus::ScaleGuard,
        Error::InvalidArgument(_) | Error::DimensionMismatch(_) => JbStatus::Usage,
        _ => JbStatus::Fail,
    }
}

fn ffi_config() -> RunConfig {
    RunConfig {
        format: "json".into(),
        ..RunConfig::default()
    }
}

unsafe fn write_report(out: *mut *mut JbReport, result: Result<Report, Error>) -> JbStatus {
    if out.is_null() {
        return JbStatus::NullArgument;
    }
    unsafe { *out = ptr::null_mut() };
    match result {
        Ok(report) => {
            let pass = report.all_pass();
            match CString::new(report.to_json()) {
                Ok(json) => {
                    let handle = Box::new(JbReport { json, pass });
                    unsafe { *out = Box::into_raw(handle) };
                    if pass {
                        JbStatus::Ok
                    } else {
                        JbStatus::Fail
                    }
                }
                Err(_) => JbStatus::Internal,
            }
        }
        Err(err) => status_of_error(&err),
    }
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> JbStatus {
    if out.is_null() {
        return JbStatus::NullArgument;
    }
    match CString::new(value) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            JbStatus::Ok
        }
        Err(_) => JbStatus::Internal,
    }
}

unsafe fn parse_cstr<'a>(ptr: *const c_char) -> Result<&'a str, JbStatus> {
    if ptr.is_null() {
        return Err(JbStatus::NullArgument);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| JbStatus::Usage)
}

fn parse_bigint(s: &str) -> Result<BigInt, JbStatus> {
    s.trim().parse().map_err(|_| JbStatus::Usage)
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>, JbStatus> {
    s.split(',')
        .map(|part| part.trim().parse().map_err(|_| JbStatus::Usage))
        .collect()
}

/// Library version as a static NUL-terminated string; never freed.
#[no_mangle]
pub extern "C" fn jb_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

/// Frees a string returned through a `char**` out-parameter.
///
/// # Safety
/// `s` must be a pointer previously returned by this library and not yet
/// freed; passing anything else is undefined behavior. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn jb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Writes the hypersurface degree bound for dimension `n` as a decimal
/// string.
///
/// # Safety
/// `out` must be a valid pointer to writable `char*` storage.
#[no_mangle]
pub unsafe extern "C" fn jb_kobayashi_bound(n: u32, out: *mut *mut c_char) -> JbStatus {
    match kobayashi_degree_bound(n) {
        Ok(v) => unsafe { write_string(out, v.to_string()) },
        Err(e) => status_of_error(&e),
    }
}

/// Writes the complete-intersection degree bound for projective `N`-space
/// as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer to writable `char*` storage.
#[no_mangle]
pub unsafe extern "C" fn jb_debarre_bound(big_n: u32, out: *mut *mut c_char) -> JbStatus {
    match debarre_degree_bound(big_n) {
        Ok(v) => unsafe { write_string(out, v.to_string()) },
        Err(e) => status_of_error(&e),
    }
}

/// Searches a witness decomposition `d = n(n+1)(r+n) + ε`; `d_decimal` is a
/// decimal integer string. Returns `Ok` when a witness exists, `Fail` when
/// absent; the report is produced either way.
///
/// # Safety
/// `d_decimal` must be a NUL-terminated string and `out` a valid pointer to
/// writable report-handle storage.
#[no_mangle]
pub unsafe extern "C" fn jb_witness_kobayashi(
    n: u32,
    d_decimal: *const c_char,
    out: *mut *mut JbReport,
) -> JbStatus {
    let d = match unsafe { parse_cstr(d_decimal) }.and_then(parse_bigint) {
        Ok(d) => d,
        Err(status) => return status,
    };
    unsafe { write_report(out, runner::witness_kobayashi(n, &d, &ffi_config())) }
}

/// Searches a witness decomposition `d_p = δ_p(r+1) + ε_p` for `c` factors;
/// `d_csv` lists decimal degrees separated by commas (one value is
/// replicated to all factors).
///
/// # Safety
/// `d_csv` must be a NUL-terminated string and `out` a valid pointer to
/// writable report-handle storage.
#[no_mangle]
pub unsafe extern "C" fn jb_witness_debarre(
    big_n: u32,
    c: u32,
    d_csv: *const c_char,
    search_delta: bool,
    out: *mut *mut JbReport,
) -> JbStatus {
    let text = match unsafe { parse_cstr(d_csv) } {
        Ok(t) => t,
        Err(status) => return status,
    };
    let mut degrees: Vec<BigInt> = Vec::new();
    for part in text.split(',') {
        match parse_bigint(part) {
            Ok(d) => degrees.push(d),
            Err(status) => return status,
        }
    }
    if degrees.len() == 1 && c > 1 {
        degrees = vec![degrees[0].clone(); c as usize];
    }
    let options = DebarreSearchOptions {
        search_delta_above_min: search_delta,
        ..DebarreSearchOptions::default()
    };
    unsafe {
        write_report(
            out,
            runner::witness_debarre(big_n, c as usize, &degrees, &options, &ffi_config()),
        )
    }
}

/// Runs the Wronskian identity suites with the given seed.
///
/// # Safety
/// `out` must be a valid pointer to writable report-handle storage.
#[no_mangle]
pub unsafe extern "C" fn jb_verify_wronskian(
    n: u32,
    k: u32,
    trials: u64,
    seed: u64,
    out: *mut *mut JbReport,
) -> JbStatus {
    let config = RunConfig {
        seed,
        ..ffi_config()
    };
    unsafe {
        write_report(
            out,
            runner::verify_wronskian(n as usize, k as usize, trials, &config),
        )
    }
}

/// Verifies the pencil-curve local multiplicity `δ^(N-1)`.
///
/// # Safety
/// `out` must be a valid pointer to writable report-handle storage.
#[no_mangle]
pub unsafe extern "C" fn jb_verify_lemma31(
    big_n: u32,
    delta: u32,
    out: *mut *mut JbReport,
) -> JbStatus {
    unsafe {
        write_report(
            out,
            runner::verify_lemma31(big_n as usize, delta, &ffi_config()),
        )
    }
}

/// Verifies the product-curve local multiplicities `(∏ δ_j^(k+1))/δ_i` for
/// every pencil factor; `delta_csv` lists `c` positive degrees.
///
/// # Safety
/// `delta_csv` must be a NUL-terminated string and `out` a valid pointer to
/// writable report-handle storage.
#[no_mangle]
pub unsafe extern "C" fn jb_verify_lemma_product(
    c: u32,
    k: u32,
    delta_csv: *const c_char,
    out: *mut *mut JbReport,
) -> JbStatus {
    let deltas = match unsafe { parse_cstr(delta_csv) }.and_then(parse_u32_list) {
        Ok(d) => d,
        Err(status) => return status,
    };
    unsafe {
        write_report(
            out,
            runner::verify_lemma_product(c as usize, k as usize, &deltas, &ffi_config()),
        )
    }
}

/// Verifies the Plücker coordinates and degree-1 property of the pencil
/// curve.
///
/// # Safety
/// `out` must be a valid pointer to writable report-handle storage.
#[no_mangle]
pub unsafe extern "C" fn jb_verify_pluecker(
    big_n: u32,
    delta: u32,
    out: *mut *mut JbReport,
) -> JbStatus {
    unsafe {
        write_report(
            out,
            runner::verify_pluecker(big_n as usize, delta, &ffi_config()),
        )
    }
}

/// Scans the span zero-locus over integer jets for each degree in
/// `delta_csv`.
///
/// # Safety
/// `delta_csv` must be a NUL-terminated string and `out` a valid pointer to
/// writable report-handle storage.
#[no_mangle]
pub unsafe extern "C" fn jb_verify_stabilization(
    delta_csv: *const c_char,
    grid: i64,
    out: *mut *mut JbReport,
) -> JbStatus {
    let deltas = match unsafe { parse_cstr(delta_csv) }.and_then(parse_u32_list) {
        Ok(d) => d,
        Err(status) => return status,
    };
    unsafe {
        write_report(
            out,
            runner::verify_stabilization(&deltas, grid, &ffi_config()),
        )
    }
}

/// 1 when every check in the report passed, 0 otherwise, -1 on null.
///
/// # Safety
/// `report` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn jb_report_pass(report: *const JbReport) -> i32 {
    if report.is_null() {
        return -1;
    }
    i32::from(unsafe { &*report }.pass)
}

/// Borrowed pointer to the report's JSON document; valid until the report
/// is freed.
///
/// # Safety
/// `report` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn jb_report_json(report: *const JbReport) -> *const c_char {
    if report.is_null() {
        return ptr::null();
    }
    unsafe { &*report }.json.as_ptr()
}

/// Frees a report handle. Null is ignored.
///
/// # Safety
/// `report` must be a handle previously returned by this library and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn jb_report_free(report: *mut JbReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn version_is_nul_terminated() {
        let p = jb_version();
        assert!(!p.is_null());
        let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap();
        assert_eq!(s, env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn bounds_round_trip_as_strings() {
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe { jb_kobayashi_bound(2, &mut out) };
        assert_eq!(status, JbStatus::Ok);
        let s = unsafe { CStr::from_ptr(out) }.to_str().unwrap();
        assert_eq!(s, "12338");
        unsafe { jb_string_free(out) };

        let status = unsafe { jb_kobayashi_bound(1, &mut out) };
        assert_eq!(status, JbStatus::Usage);
    }

    #[test]
    fn null_out_pointers_are_rejected() {
        let status = unsafe { jb_kobayashi_bound(2, ptr::null_mut()) };
        assert_eq!(status, JbStatus::NullArgument);
        let status = unsafe { jb_witness_kobayashi(2, ptr::null(), ptr::null_mut()) };
        assert_eq!(status, JbStatus::NullArgument);
        assert_eq!(unsafe { jb_report_pass(ptr::null()) }, -1);
        assert!(unsafe { jb_report_json(ptr::null()) }.is_null());
    }
}
