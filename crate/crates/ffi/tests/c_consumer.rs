//! Compiles and runs a small C program against the generated header and the
//! static library, exactly as an external consumer would.

use std::path::PathBuf;
use std::process::Command;

const DEMO: &str = r#"
#include <stdio.h>
#include <string.h>
#include "jetbounds.h"

int main(void) {
    char *bound = NULL;
    if (jb_kobayashi_bound(2, &bound) != JB_STATUS_OK) return 1;
    if (strcmp(bound, "12338") != 0) return 2;
    jb_string_free(bound);

    if (jb_kobayashi_bound(1, &bound) != JB_STATUS_USAGE) return 3;

    jb_report *report = NULL;
    if (jb_witness_kobayashi(2, "12338", &report) != JB_STATUS_OK) return 4;
    if (jb_report_pass(report) != 1) return 5;
    const char *json = jb_report_json(report);
    if (json == NULL || strstr(json, "\"r\": \"2054\"") == NULL) return 6;
    jb_report_free(report);

    if (jb_witness_kobayashi(2, "100", &report) != JB_STATUS_FAIL) return 7;
    jb_report_free(report);

    if (jb_verify_lemma31(5, 2, &report) != JB_STATUS_SCALE_GUARD) return 8;
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from the crate root; the workspace target directory holds
    // the freshly built static library
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    manifest.join("../../target/debug")
}

#[test]
fn c_program_links_and_runs() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("cc not found; skipping C consumer test");
        return;
    }
    let staticlib = target_dir().join("libjetbounds_ffi.a");
    if !staticlib.exists() {
        eprintln!("static library not built at {staticlib:?}; skipping");
        return;
    }

    let dir = std::env::temp_dir().join(format!("jetbounds-c-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("demo.c");
    let bin = dir.join("demo");
    std::fs::write(&src, DEMO).unwrap();

    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let compile = Command::new("cc")
        .arg("-std=c99")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&bin)
        .output()
        .expect("cc runs");
    assert!(
        compile.status.success(),
        "compilation failed: {}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&bin).output().expect("demo runs");
    assert!(
        run.status.success(),
        "demo exited with {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stderr)
    );
    std::fs::remove_dir_all(&dir).ok();
}
