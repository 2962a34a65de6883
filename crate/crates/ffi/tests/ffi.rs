use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use koornwinder_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    kw_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = kw_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

unsafe fn scalar(s: &str) -> *mut KwScalar {
    let mut out = ptr::null_mut();
    assert_eq!(kw_scalar_parse(c(s).as_ptr(), &mut out), KwStatus::Ok);
    out
}

#[test]
fn scalar_arithmetic_and_printing() {
    unsafe {
        let x = scalar("alpha/beta");
        let y = scalar("1 - alpha/beta");
        let mut sum = ptr::null_mut();
        assert_eq!(kw_scalar_add(x, y, &mut sum), KwStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(kw_scalar_to_string(sum, &mut text), KwStatus::Ok);
        assert_eq!(take(text), "1");
        let mut json = ptr::null_mut();
        assert_eq!(kw_scalar_to_json(x, &mut json), KwStatus::Ok);
        assert!(take(json).contains("num"));
        let mut eq = -1;
        assert_eq!(kw_scalar_equal(sum, scalar("1"), &mut eq), KwStatus::Ok);
        assert_eq!(eq, 1);
        kw_scalar_free(x);
        kw_scalar_free(y);
        kw_scalar_free(sum);
        kw_scalar_free(ptr::null_mut());
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(kw_scalar_parse(c("alpha +* 2").as_ptr(), &mut out), KwStatus::Parse);
        assert!(out.is_null());
        assert!(last_error().contains("parse"));
        assert_eq!(kw_scalar_parse(ptr::null(), &mut out), KwStatus::NullPointer);

        let (x, zero) = (scalar("q"), scalar("0"));
        assert_eq!(kw_scalar_div(x, zero, &mut out), KwStatus::DivisionByZero);
        assert!(last_error().contains("division by zero"));

        let bad = [0xffu8, 0];
        assert_eq!(kw_gen_r(bad.as_ptr() as *const c_char, &mut out), KwStatus::Utf8);
        assert_eq!(kw_partition_z(2, 3, &mut out), KwStatus::InvalidArgument);

        assert_eq!(kw_scalar_to_string(x, ptr::null_mut()), KwStatus::NullPointer);
        // a successful call clears the message
        assert_eq!(kw_scalar_div(x, x, &mut out), KwStatus::Ok);
        assert!(kw_last_error().is_null());
        kw_scalar_free(out);
        kw_scalar_free(x);
        kw_scalar_free(zero);
    }
}

#[test]
fn tableaux_values() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(kw_gen_r(c("os").as_ptr(), &mut r), KwStatus::Ok);
        let expect = scalar("beta*t^2+gamma*t+beta*gamma*t+gamma*delta");
        let mut eq = 0;
        kw_scalar_equal(r, expect, &mut eq);
        assert_eq!(eq, 1);

        let mut rt = ptr::null_mut();
        assert_eq!(kw_gen_rtilde(c("ss").as_ptr(), &mut rt), KwStatus::Ok);
        let mut s = ptr::null_mut();
        kw_scalar_to_string(rt, &mut s);
        assert_eq!(take(s), "1");

        let mut zt = ptr::null_mut();
        assert_eq!(kw_partition_ztilde(2, 2, &mut zt), KwStatus::Ok);
        kw_scalar_equal(zt, rt, &mut eq);
        assert_eq!(eq, 1);

        let mut n = 0u64;
        assert_eq!(kw_count_tableaux(c("b").as_ptr(), &mut n), KwStatus::Ok);
        assert!(n > 0);
        for p in [r, expect, rt, zt] {
            kw_scalar_free(p);
        }
    }
}

#[test]
fn laurent_polynomials() {
    unsafe {
        let mut k = ptr::null_mut();
        assert_eq!(kw_koornwinder_k(c("bs").as_ptr(), &mut k), KwStatus::Ok);
        let mut via = ptr::null_mut();
        assert_eq!(kw_koornwinder_k_via_ek(2, 1, &mut via), KwStatus::Ok);
        let mut eq = 0;
        assert_eq!(kw_laurent_equal(k, via, &mut eq), KwStatus::Ok);
        assert_eq!(eq, 1);

        let mut p = ptr::null_mut();
        assert_eq!(kw_laurent_parse(c("z1 + 1/z1").as_ptr(), 1, &mut p), KwStatus::Ok);
        let mut s = ptr::null_mut();
        kw_laurent_to_string(p, &mut s);
        assert_eq!(take(s), "z1 + z1^-1");
        kw_laurent_to_json(p, &mut s);
        assert!(take(s).starts_with("{\"nvars\":1"));
        let mut bad = ptr::null_mut();
        assert_eq!(kw_laurent_parse(c("z3").as_ptr(), 1, &mut bad), KwStatus::Parse);

        let mut f = ptr::null_mut();
        assert_eq!(kw_asep_poly_f(c("ob").as_ptr(), &mut f), KwStatus::Ok);
        kw_laurent_to_string(f, &mut s);
        assert!(take(s).contains("z1"));
        for h in [k, via, p, f] {
            kw_laurent_free(h);
        }
    }
}

#[test]
fn verification_reports() {
    unsafe {
        let mut rep = ptr::null_mut();
        assert_eq!(kw_verify_qkz(c("bs").as_ptr(), &mut rep), KwStatus::Ok);
        assert!(kw_report_len(rep) > 0);
        assert_eq!(kw_report_passed(rep), 1);
        let (mut passed, mut name, mut detail) = (0, ptr::null_mut(), ptr::null_mut());
        assert_eq!(kw_report_entry(rep, 0, &mut passed, &mut name, &mut detail), KwStatus::Ok);
        assert_eq!(passed, 1);
        assert!(!take(name).is_empty());
        take(detail);
        assert_eq!(
            kw_report_entry(rep, kw_report_len(rep), &mut passed, ptr::null_mut(), ptr::null_mut()),
            KwStatus::InvalidArgument
        );
        let mut s = ptr::null_mut();
        kw_report_to_string(rep, &mut s);
        assert!(take(s).starts_with("PASS"));
        kw_report_to_json(rep, &mut s);
        assert!(take(s).starts_with('['));
        kw_report_free(rep);

        assert_eq!(kw_verify_hecke(2, 3, 1, 7, &mut rep), KwStatus::Ok);
        assert_eq!(kw_report_passed(rep), 1);
        kw_report_free(rep);
        assert_eq!(kw_verify_hecke(1, 3, 1, 7, &mut rep), KwStatus::InvalidArgument);

        assert_eq!(kw_verify_all(1, 0, &mut rep), KwStatus::Ok);
        assert!(kw_report_len(rep) > 10);
        kw_report_free(rep);
        assert_eq!(kw_report_len(ptr::null()), 0);
    }
}

#[test]
fn asep_stationary() {
    unsafe {
        let mut s = ptr::null_mut();
        let params = c("alpha=1/2,beta=1/3,gamma=1/5,delta=1/7,t=1/11");
        assert_eq!(kw_asep_stationary_json(1, 0, params.as_ptr(), &mut s), KwStatus::Ok);
        // (α+δ)/(α+β+γ+δ) = 135/247
        assert_eq!(take(s), r#"{"b":"135/247","o":"112/247"}"#);
        let neg = c("alpha=-1");
        assert_eq!(kw_asep_stationary_json(2, 1, neg.as_ptr(), &mut s), KwStatus::Nonpositive);
        assert_eq!(kw_asep_stationary_json(2, 1, c("alpha=3").as_ptr(), &mut s), KwStatus::NotStochastic);
    }
}

fn header() -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/koornwinder.h")).unwrap()
}

#[test]
fn header_declares_api() {
    let h = header();
    for decl in [
        "typedef struct KwScalar KwScalar;",
        "typedef struct KwLaurent KwLaurent;",
        "typedef struct KwReport KwReport;",
        "KW_STATUS_OK = 0",
        "KW_STATUS_PANIC = 12",
        "const char *kw_last_error(void);",
        "void kw_string_free(char *s);",
        "enum KwStatus kw_scalar_parse(const char *text, struct KwScalar **out);",
        "enum KwStatus kw_asep_stationary_json(size_t n,",
        "enum KwStatus kw_verify_all(size_t max_n, uint64_t seed, struct KwReport **out);",
    ] {
        assert!(h.contains(decl), "missing {decl}");
    }
}

#[test]
fn header_compiles_as_c() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new(&cc)
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", "-std=c99", "-I"])
        .arg(&dir)
        .arg("-")
        .stdin(std::process::Stdio::piped())
        .spawn()
        .and_then(|mut child| {
            use std::io::Write;
            child.stdin.take().unwrap().write_all(b"#include \"koornwinder.h\"\nint main(void) { return 0; }\n")?;
            child.wait()
        });
    match status {
        Ok(s) => assert!(s.success(), "{cc} rejected the header"),
        Err(e) => eprintln!("skipping: no C compiler ({e})"),
    }
}
