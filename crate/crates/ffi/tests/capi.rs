//! End-to-end exercise of the C ABI: the JSON round trip from Rust, and a
//! real C program compiled against the generated header and linked with the
//! static library.

use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use matroid_verify_ffi::*;

#[test]
fn spec_json_to_report_roundtrip() {
    let spec = CString::new(r#"{"kind": "uniform", "r": 2, "n": 4}"#).unwrap();
    let mut handle: *mut MvMatroid = ptr::null_mut();
    let status = unsafe { mv_matroid_from_spec_json(spec.as_ptr(), &mut handle) };
    assert_eq!(status, MvStatus::MvOk);

    let checks = CString::new("dowling,zhao,strong").unwrap();
    let mut json: *mut libc::c_char = ptr::null_mut();
    let status = unsafe { mv_run_checks_json(handle, checks.as_ptr(), &mut json) };
    assert_eq!(status, MvStatus::MvOk);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
    unsafe { mv_string_free(json) };
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["summary"]["violations"], 0);
    assert!(report["records"].as_array().unwrap().len() >= 3);

    let mut lines: *mut libc::c_char = ptr::null_mut();
    let which = CString::new("fk:2").unwrap();
    let status = unsafe { mv_poly_lines(handle, which.as_ptr(), &mut lines) };
    assert_eq!(status, MvStatus::MvOk);
    let text = unsafe { CStr::from_ptr(lines) }.to_str().unwrap().to_string();
    unsafe { mv_string_free(lines) };
    assert_eq!(text.lines().count(), 6, "six independent pairs in U(2,4)");

    unsafe { mv_matroid_free(handle) };
}

#[test]
fn parse_errors_are_reported() {
    let spec = CString::new(r#"{"kind": "explicit", "n": 2, "independents": [[],[0,1]]}"#).unwrap();
    let mut handle: *mut MvMatroid = ptr::null_mut();
    let status = unsafe { mv_matroid_from_spec_json(spec.as_ptr(), &mut handle) };
    assert_eq!(status, MvStatus::MvAxiomViolation);
    let msg = mv_last_error_message();
    assert!(!msg.is_null());
    let text = unsafe { CStr::from_ptr(msg) }.to_str().unwrap().to_string();
    unsafe { mv_string_free(msg) };
    assert!(text.contains("hereditary"), "{text}");
}

const C_SMOKE: &str = r#"
#include <stdio.h>
#include <string.h>
#include "matroid_verify.h"

int main(void) {
    MvMatroid *m = NULL;
    if (mv_matroid_from_spec_json("{\"kind\": \"uniform\", \"r\": 2, \"n\": 4}", &m) != MV_OK)
        return 1;
    uint32_t n = 0;
    if (mv_matroid_ground_size(m, &n) != MV_OK || n != 4)
        return 2;
    bool indep = false;
    if (mv_matroid_is_independent(m, 0x3u, &indep) != MV_OK || !indep)
        return 3;
    if (mv_matroid_is_independent(m, 0x7u, &indep) != MV_OK || indep)
        return 4;
    uint32_t rank = 0;
    if (mv_matroid_rank(m, 0xFu, &rank) != MV_OK || rank != 2)
        return 5;
    bool lorentzian = false;
    if (mv_matroid_g_is_lorentzian(m, &lorentzian) != MV_OK || !lorentzian)
        return 6;
    MvMatroid *dual = NULL;
    if (mv_matroid_dual(m, &dual) != MV_OK)
        return 7;
    char *name = NULL;
    if (mv_matroid_name(dual, &name) != MV_OK || strstr(name, "dual") == NULL)
        return 8;
    mv_string_free(name);
    /* out-of-range subsets are rejected, not UB */
    if (mv_matroid_rank(m, 0x10u, &rank) != MV_INVALID_ARGUMENT)
        return 9;
    char *err = mv_last_error_message();
    if (err == NULL)
        return 10;
    mv_string_free(err);
    mv_matroid_free(dual);
    mv_matroid_free(m);
    printf("c smoke ok, library %s\n", mv_version());
    return 0;
}
"#;

#[test]
fn c_program_links_against_the_static_library() {
    // the test binary runs from target/<profile>/deps; the staticlib lands
    // there, or one level up when built as a top-level target
    let deps_dir: PathBuf = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let staticlib = [
        deps_dir.join("libmatroid_verify_ffi.a"),
        deps_dir.join("../libmatroid_verify_ffi.a"),
    ]
    .into_iter()
    .find(|p| p.exists())
    .expect("static library next to the test binary");
    let include_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");

    let scratch = tempfile::tempdir().unwrap();
    let source = scratch.path().join("smoke.c");
    std::fs::write(&source, C_SMOKE).unwrap();
    let binary = scratch.path().join("smoke");

    let compile = Command::new("cc")
        .arg(&source)
        .arg(staticlib)
        .arg("-I")
        .arg(&include_dir)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("cc is available in this toolchain");
    assert!(
        compile.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().unwrap();
    assert!(
        run.status.success(),
        "smoke binary exited with {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stdout)
    );
}
