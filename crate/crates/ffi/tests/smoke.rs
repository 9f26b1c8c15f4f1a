//! Exercises the C ABI through raw pointers exactly as a foreign caller
//! would, and syntax-checks the generated header with the system C compiler
//! when one is available.

use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use jetbounds_ffi::{
    jb_debarre_bound, jb_report_free, jb_report_json, jb_report_pass, jb_string_free,
    jb_verify_lemma31, jb_verify_lemma_product, jb_verify_pluecker, jb_verify_wronskian,
    jb_witness_debarre, jb_witness_kobayashi, JbReport, JbStatus,
};

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { jb_string_free(p) };
    s
}

fn report_json(handle: *mut JbReport) -> serde_json::Value {
    assert!(!handle.is_null());
    let p = unsafe { jb_report_json(handle) };
    let text = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    serde_json::from_str(&text).expect("report is valid json")
}

#[test]
fn bound_strings_round_trip() {
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { jb_debarre_bound(4, &mut out) }, JbStatus::Ok);
    assert_eq!(take_string(out), "134477");
}

#[test]
fn witness_reports_cross_the_boundary() {
    let d = CString::new("12338").unwrap();
    let mut handle: *mut JbReport = ptr::null_mut();
    let status = unsafe { jb_witness_kobayashi(2, d.as_ptr(), &mut handle) };
    assert_eq!(status, JbStatus::Ok);
    assert_eq!(unsafe { jb_report_pass(handle) }, 1);
    let v = report_json(handle);
    assert_eq!(v["schema"], "1");
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["name"] == "witness kobayashi"));
    unsafe { jb_report_free(handle) };

    // absent witness: Fail status, report still present
    let d = CString::new("100").unwrap();
    let mut handle: *mut JbReport = ptr::null_mut();
    let status = unsafe { jb_witness_kobayashi(2, d.as_ptr(), &mut handle) };
    assert_eq!(status, JbStatus::Fail);
    assert_eq!(unsafe { jb_report_pass(handle) }, 0);
    unsafe { jb_report_free(handle) };

    // malformed degree: usage error, no report
    let bad = CString::new("twelve").unwrap();
    let mut handle: *mut JbReport = ptr::null_mut();
    let status = unsafe { jb_witness_kobayashi(2, bad.as_ptr(), &mut handle) };
    assert_eq!(status, JbStatus::Usage);
    assert!(handle.is_null());
}

#[test]
fn verify_suites_report_through_handles() {
    let mut handle: *mut JbReport = ptr::null_mut();
    assert_eq!(
        unsafe { jb_verify_lemma31(2, 3, &mut handle) },
        JbStatus::Ok
    );
    let v = report_json(handle);
    let mult = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "lemma31 multiplicity")
        .expect("multiplicity check");
    assert_eq!(mult["got"], "3");
    unsafe { jb_report_free(handle) };

    // scale guard maps to its own status and yields no report
    let mut handle: *mut JbReport = ptr::null_mut();
    assert_eq!(
        unsafe { jb_verify_lemma31(5, 2, &mut handle) },
        JbStatus::ScaleGuard
    );
    assert!(handle.is_null());

    let deltas = CString::new("2,3").unwrap();
    let mut handle: *mut JbReport = ptr::null_mut();
    assert_eq!(
        unsafe { jb_verify_lemma_product(2, 1, deltas.as_ptr(), &mut handle) },
        JbStatus::Ok
    );
    unsafe { jb_report_free(handle) };

    let mut handle: *mut JbReport = ptr::null_mut();
    assert_eq!(
        unsafe { jb_verify_pluecker(3, 2, &mut handle) },
        JbStatus::Ok
    );
    unsafe { jb_report_free(handle) };

    let mut handle: *mut JbReport = ptr::null_mut();
    assert_eq!(
        unsafe { jb_verify_wronskian(2, 2, 10, 7, &mut handle) },
        JbStatus::Ok
    );
    unsafe { jb_report_free(handle) };
}

#[test]
fn debarre_witness_replicates_single_degree() {
    let d = CString::new("25015").unwrap();
    let mut handle: *mut JbReport = ptr::null_mut();
    let status = unsafe { jb_witness_debarre(3, 2, d.as_ptr(), false, &mut handle) };
    assert_eq!(status, JbStatus::Ok);
    let v = report_json(handle);
    let witness = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "witness debarre")
        .expect("witness check");
    assert_eq!(witness["got"]["delta"], serde_json::json!(["5", "5"]));
    unsafe { jb_report_free(handle) };
}

#[test]
fn generated_header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/jetbounds.h");
    assert!(
        std::path::Path::new(header).exists(),
        "header not generated at {header}"
    );
    let available = Command::new("cc").arg("--version").output().is_ok();
    if !available {
        eprintln!("cc not found; skipping header syntax check");
        return;
    }
    let out = Command::new("cc")
        .args(["-std=c99", "-fsyntax-only", header])
        .output()
        .expect("cc runs");
    assert!(
        out.status.success(),
        "header failed to compile: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}
