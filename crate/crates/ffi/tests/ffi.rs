use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use contact_verma_ffi::*;

fn module(q: u8, m: i32, n: i32) -> *mut CvModule {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cv_module_new(q as _, m, n, &mut out) }, CvStatus::Ok);
    out
}

#[test]
fn module_handles() {
    let m = module(b'C', -1, -2);
    let mut dim = 0usize;
    assert_eq!(unsafe { cv_module_dim_v(m, &mut dim) }, CvStatus::Ok);
    assert_eq!(dim, 6);
    assert_eq!(unsafe { cv_module_graded_dim(m, 2, &mut dim) }, CvStatus::Ok);
    assert_eq!(dim, 42);
    unsafe { cv_module_free(m) };

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cv_module_new(b'B' as _, 1, 0, &mut out) }, CvStatus::InvalidModule);
    assert!(out.is_null());
    assert_eq!(unsafe { cv_module_new(b'Q' as _, 0, 0, &mut out) }, CvStatus::InvalidArgument);
    assert_eq!(unsafe { cv_module_new(b'A' as _, 0, 0, ptr::null_mut()) }, CvStatus::NullPointer);

    let text = CString::new("D:2,-1").unwrap();
    assert_eq!(unsafe { cv_module_parse(text.as_ptr(), &mut out) }, CvStatus::Ok);
    assert_eq!(unsafe { cv_module_dim_v(out, &mut dim) }, CvStatus::Ok);
    assert_eq!(dim, 6);
    unsafe { cv_module_free(out) };
    unsafe { cv_module_free(ptr::null_mut()) };
    assert_eq!(unsafe { cv_module_dim_v(ptr::null(), &mut dim) }, CvStatus::NullPointer);
}

#[test]
fn homology_and_singular_counts() {
    let c = module(b'C', -1, -1);
    let mut h = 9usize;
    for d in 0..=4 {
        assert_eq!(unsafe { cv_homology_dim(c, d, &mut h) }, CvStatus::Ok);
        assert_eq!(h, usize::from(d == 3));
    }
    unsafe { cv_module_free(c) };
    let a = module(b'A', 0, 0);
    assert_eq!(unsafe { cv_singular_count(a, 4, true, &mut h) }, CvStatus::Ok);
    assert_eq!(h, 0);
    assert_eq!(unsafe { cv_singular_count(a, 1, true, &mut h) }, CvStatus::Ok);
    assert_eq!(h, 1);
    unsafe { cv_module_free(a) };
}

#[test]
fn characters_and_sizes() {
    let a = module(b'A', 0, 0);
    let mut ch = ptr::null_mut();
    assert_eq!(unsafe { cv_character_new(a, false, 5, &mut ch) }, CvStatus::Ok);
    let mut len = 0usize;
    assert_eq!(unsafe { cv_character_len(ch, &mut len) }, CvStatus::Ok);
    let coeffs: Vec<i64> = (0..len)
        .map(|d| {
            let mut c = 0;
            assert_eq!(unsafe { cv_character_coeff(ch, d, &mut c) }, CvStatus::Ok);
            c
        })
        .collect();
    assert_eq!(coeffs, vec![1, 4, 7, 8, 8, 8]);
    let mut c = 0;
    assert_eq!(unsafe { cv_character_coeff(ch, 6, &mut c) }, CvStatus::InvalidArgument);
    let (mut num, mut den) = (7, 7);
    assert_eq!(unsafe { cv_character_size(ch, &mut num, &mut den) }, CvStatus::NotStabilized);
    unsafe { cv_character_free(ch) };

    let m = module(b'A', 1, 2);
    assert_eq!(unsafe { cv_character_new(m, true, 12, &mut ch) }, CvStatus::Ok);
    assert_eq!(unsafe { cv_character_leading_exponent(ch, &mut num, &mut den) }, CvStatus::Ok);
    assert_eq!((num, den), (3, 2));
    assert_eq!(unsafe { cv_character_size(ch, &mut num, &mut den) }, CvStatus::Ok);
    assert_eq!((num, den), (7, 1));
    unsafe { cv_character_free(ch) };
    unsafe { cv_module_free(m) };
    unsafe { cv_module_free(a) };

    for (q, m, n) in [(b'A', 1u32, 1u32), (b'B', 0, 1), (b'C', 0, 0), (b'D', 2, 0)] {
        let (mut f, mut o) = (0, 0);
        assert_eq!(unsafe { cv_size_formula(q as _, m, n, &mut f) }, CvStatus::Ok);
        assert_eq!(unsafe { cv_size_oracle(q as _, m, n, 12, &mut o) }, CvStatus::Ok);
        assert_eq!(f, o, "{}", q as char);
    }
    let mut o = 0;
    assert_eq!(unsafe { cv_size_oracle(b'A' as _, 1, 1, 3, &mut o) }, CvStatus::NotStabilized);
}

#[test]
fn status_messages() {
    let s = unsafe { CStr::from_ptr(cv_status_message(CvStatus::NotStabilized)) };
    assert!(s.to_str().unwrap().contains("stabilize"));
    let v = unsafe { CStr::from_ptr(cv_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_is_generated_and_compiles() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/contact_verma.h")).unwrap();
    for name in ["cv_module_new", "cv_homology_dim", "cv_character_coeff", "cv_size_oracle", "typedef struct CvModule CvModule", "CV_STATUS_NOT_STABILIZED"] {
        assert!(header.contains(name), "{name} missing from header");
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let Ok(out) = Command::new(&cc).args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"]).arg(dir.join("include")).arg(dir.join("tests/header_check.c")).output() else {
        eprintln!("no C compiler `{cc}`; syntax check skipped");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
