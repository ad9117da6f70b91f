use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use singbraid_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    sb_string_free(p);
    s
}

unsafe fn braid(text: &str) -> *mut SbBraidWord {
    let mut w = ptr::null_mut();
    assert_eq!(sb_braid_parse(c(text).as_ptr(), 3, &mut w), SbStatus::Ok);
    w
}

unsafe fn sp(text: &str) -> *mut SbSpWord {
    let mut w = ptr::null_mut();
    assert_eq!(sb_sp_parse(c(text).as_ptr(), &mut w), SbStatus::Ok);
    w
}

#[test]
fn braid_round_trip_and_decision() {
    unsafe {
        let w = braid("s1 s1^-1 t2^2 t2");
        let mut s = ptr::null_mut();
        assert_eq!(sb_braid_to_string(w, &mut s), SbStatus::Ok);
        assert_eq!(take_string(s), "t2^3");

        let mut inv = ptr::null_mut();
        assert_eq!(sb_braid_invert(w, &mut inv), SbStatus::Ok);
        let mut prod = ptr::null_mut();
        assert_eq!(sb_braid_concat(w, inv, &mut prod), SbStatus::Ok);
        let mut t = false;
        assert_eq!(sb_braid_is_trivial(prod, &mut t), SbStatus::Ok);
        assert!(t);

        let hard = braid("t1 t2 t1 t2^-1 t1^-1 t2^-1");
        assert_eq!(sb_braid_necessary_trivial(hard, &mut t), SbStatus::Ok);
        assert!(t);
        assert_eq!(sb_braid_is_trivial(hard, &mut t), SbStatus::Ok);
        assert!(!t);

        for p in [w, inv, prod, hard] {
            sb_braid_free(p);
        }
    }
}

#[test]
fn rewrite_and_normal_form() {
    unsafe {
        let w = braid("s1 s2 s1 s1 s2 s1");
        let mut x = ptr::null_mut();
        assert_eq!(sb_braid_rewrite(w, &mut x), SbStatus::Ok);
        let delta = sp("a12 a13 a23");
        let mut eq = false;
        assert_eq!(sb_sp_equal(x, delta, &mut eq), SbStatus::Ok);
        assert!(eq);

        let mut s = ptr::null_mut();
        assert_eq!(sb_sp_normal_form(delta, &mut s), SbStatus::Ok);
        assert_eq!(take_string(s), "d^1 | 1");

        let pinch = sp("b12^-1 a13 b12 a13^-1");
        let mut t = true;
        assert_eq!(sb_sp_is_trivial(pinch, &mut t), SbStatus::Ok);
        assert!(!t);

        sb_braid_free(w);
        sb_sp_free(x);
        sb_sp_free(delta);
        sb_sp_free(pinch);
    }
}

#[test]
fn conjugation() {
    unsafe {
        let x = sp("a23");
        let mut y = ptr::null_mut();
        assert_eq!(sb_sp_conjugate(x, c("s1").as_ptr(), &mut y), SbStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(sb_sp_to_string(y, &mut s), SbStatus::Ok);
        assert_eq!(take_string(s), "a13");
        let mut z = ptr::null_mut();
        assert_eq!(
            sb_sp_conjugate(x, c("s3").as_ptr(), &mut z),
            SbStatus::OutOfRange
        );
        sb_sp_free(x);
        sb_sp_free(y);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut w = ptr::null_mut();
        assert_eq!(
            sb_braid_parse(c("s1 q2").as_ptr(), 3, &mut w),
            SbStatus::Syntax
        );
        let msg = CStr::from_ptr(sb_last_error_message()).to_str().unwrap();
        assert!(msg.contains("q2"), "{msg}");
        assert!(w.is_null());

        assert_eq!(
            sb_braid_parse(ptr::null(), 3, &mut w),
            SbStatus::NullPointer
        );
        assert_eq!(
            sb_braid_parse(c("s1").as_ptr(), 3, ptr::null_mut()),
            SbStatus::NullPointer
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            sb_braid_parse(bad.as_ptr().cast(), 3, &mut w),
            SbStatus::InvalidUtf8
        );

        let s1 = braid("s1");
        let mut x = ptr::null_mut();
        assert_eq!(sb_braid_rewrite(s1, &mut x), SbStatus::NotPure);
        sb_braid_free(s1);

        let mut t = false;
        assert_eq!(
            sb_braid_is_trivial(ptr::null(), &mut t),
            SbStatus::NullPointer
        );
        sb_braid_free(ptr::null_mut());
        sb_sp_free(ptr::null_mut());
        sb_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_counts() {
    let (mut passed, mut total) = (0usize, 0usize);
    unsafe {
        assert_eq!(sb_verify(&mut passed, &mut total), SbStatus::Ok);
    }
    assert_eq!((passed, total), (81, 81));
}

#[test]
fn header_is_current() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/singbraid.h")).unwrap();
    for name in [
        "sb_braid_parse",
        "sb_braid_is_trivial",
        "sb_sp_normal_form",
        "sb_sp_conjugate",
        "sb_verify",
        "sb_last_error_message",
        "SB_STATUS_NOT_PURE",
        "typedef struct SbBraidWord SbBraidWord;",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// Compiles `examples/smoke.c` against the header and the static library when
/// a C compiler is on the path.
#[test]
fn c_smoke_program() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let Some(cc) = ["cc", "gcc", "clang"]
        .into_iter()
        .find(|cc| Command::new(cc).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    // Integration tests live in target/<profile>/deps.
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libsingbraid_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let out_dir = std::env::temp_dir().join(format!("singbraid-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let bin = out_dir.join("smoke");
    let status = Command::new(cc)
        .arg(dir.join("examples/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&bin).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
    let _ = std::fs::remove_dir_all(out_dir);
}
