use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use chromsym_ffi::*;

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    chromsym_string_free(p);
    s
}

#[test]
fn claw_round_trip() {
    unsafe {
        let legs = [1usize, 1, 1];
        let mut g = ptr::null_mut();
        assert_eq!(chromsym_graph_spider(legs.as_ptr(), 3, &mut g), ChromsymStatus::Ok);
        assert_eq!(chromsym_graph_vertex_count(g), 4);
        let mut x = ptr::null_mut();
        assert_eq!(chromsym_csf(g, ChromsymBasis::Schur, 24, &mut x), ChromsymStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(chromsym_element_to_string(x, &mut s), ChromsymStatus::Ok);
        assert_eq!(take_string(s), "s31 - s22 + 5s211 + 8s1111");
        let mut class = ChromsymPositivity::EPositive;
        assert_eq!(chromsym_element_positivity(x, &mut class), ChromsymStatus::Ok);
        assert_eq!(class, ChromsymPositivity::NotSchurPositive);
        let mut e = ptr::null_mut();
        assert_eq!(chromsym_element_to_basis(x, ChromsymBasis::Elementary, &mut e), ChromsymStatus::Ok);
        let mut j = ptr::null_mut();
        assert_eq!(chromsym_element_to_json(e, &mut j), ChromsymStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(&take_string(j)).unwrap();
        assert_eq!(json["basis"], "e");
        chromsym_element_free(e);
        chromsym_element_free(x);
        chromsym_graph_free(g);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("1 2\n2 x\n").unwrap();
        assert_eq!(chromsym_graph_parse(bad.as_ptr(), &mut g), ChromsymStatus::Parse);
        let msg = CStr::from_ptr(chromsym_last_error()).to_str().unwrap();
        assert!(msg.contains("line 2"), "{msg}");
        assert_eq!(chromsym_graph_parse(ptr::null(), &mut g), ChromsymStatus::NullPointer);
        assert_eq!(chromsym_graph_path(3, ptr::null_mut()), ChromsymStatus::NullPointer);
        let mut x = ptr::null_mut();
        assert_eq!(chromsym_csf(ptr::null(), ChromsymBasis::Schur, 24, &mut x), ChromsymStatus::NullPointer);
        assert_eq!(chromsym_graph_path(9, &mut g), ChromsymStatus::Ok);
        assert_eq!(chromsym_csf(g, ChromsymBasis::Schur, 3, &mut x), ChromsymStatus::CapExceeded);
        chromsym_graph_free(g);
        chromsym_graph_free(ptr::null_mut());
        chromsym_element_free(ptr::null_mut());
        chromsym_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_entry_point() {
    unsafe {
        let args = CString::new("verify lemma33 --n 12").unwrap();
        let mut out = ptr::null_mut();
        let mut code = -1;
        assert_eq!(chromsym_verify(args.as_ptr(), &mut out, &mut code), ChromsymStatus::Ok);
        assert_eq!(code, 0);
        let json: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(json["status"], "pass");
        let args = CString::new("verify nonsense").unwrap();
        assert_eq!(chromsym_verify(args.as_ptr(), &mut out, &mut code), ChromsymStatus::Ok);
        assert_eq!(code, 64);
        assert!(!take_string(out).is_empty());
    }
}

#[test]
fn header_declares_exports() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/chromsym.h")).unwrap();
    for name in [
        "chromsym_last_error",
        "chromsym_string_free",
        "chromsym_graph_path",
        "chromsym_graph_spider",
        "chromsym_graph_parse",
        "chromsym_graph_free",
        "chromsym_csf",
        "chromsym_element_to_json",
        "chromsym_element_free",
        "chromsym_verify",
        "typedef struct ChromsymGraph ChromsymGraph",
        "CHROMSYM_STATUS_CAP_EXCEEDED = 4",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// Compiles a small C program against the header and the static library.
#[test]
fn c_smoke_program() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let target = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = target.join("libchromsym_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let tmp = tempfile::tempdir().unwrap();
    let exe = tmp.path().join("smoke");
    let status = Command::new("cc")
        .arg(dir.join("tests/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("cc available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "s31 - s22 + 5s211 + 8s1111");
}
