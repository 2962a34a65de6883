//! C ABI over the `koornwinder` crate.
//!
//! Values cross the boundary as opaque handles (`KwScalar`, `KwLaurent`,
//! `KwReport`) or as NUL-terminated UTF-8 strings owned by the library.
//! Every function returns a `KwStatus`; on failure a message is available
//! from `kw_last_error` until the next call on the same thread.
//!
//! Ownership: handles are freed with their `*_free` function, strings with
//! `kw_string_free`. Passing NULL to a free function is a no-op.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use koornwinder::asep::{build_generator, stationary_exact, AsepParams};
use koornwinder::exactalg::{parse_laurent, parse_scalar, LaurentPoly, Scalar};
use koornwinder::hecke::verify_hecke_relations;
use koornwinder::koornwinder::{asep_poly_f, koornwinder_k, koornwinder_k_via_ek, verify_qkz};
use koornwinder::suite::verify_all;
use koornwinder::tableaux::{count_tableaux, gen_r, gen_rtilde, partition_z, partition_ztilde, Word};
use koornwinder::{Error, Report};

/// Result code of every `kw_*` function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KwStatus {
    Ok = 0,
    NullPointer = 1,
    Utf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    DivisionByZero = 5,
    NotDivisible = 6,
    Singular = 7,
    Reducible = 8,
    NotStochastic = 9,
    Nonpositive = 10,
    /// A verification ran but at least one check failed.
    VerificationFailed = 11,
    Panic = 12,
}

/// A rational function in the parameters.
pub struct KwScalar(Scalar);

/// A Laurent polynomial in `z1..zN` with scalar coefficients.
pub struct KwLaurent(LaurentPoly);

/// The outcome of a verification run.
pub struct KwReport(Report);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> KwStatus {
    match e {
        Error::Parse(_) => KwStatus::Parse,
        Error::DivisionByZero => KwStatus::DivisionByZero,
        Error::NotDivisible => KwStatus::NotDivisible,
        Error::SubstitutionSingular => KwStatus::Singular,
        Error::Reducible => KwStatus::Reducible,
        Error::NotStochastic(_) => KwStatus::NotStochastic,
        Error::NonpositiveParam(_) => KwStatus::Nonpositive,
        _ => KwStatus::InvalidArgument,
    }
}

struct Fail(KwStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, recording any error or panic and converting it to a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> KwStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KwStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            KwStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(KwStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|e| Fail(KwStatus::Utf8, e.to_string()))
}

unsafe fn read_word(s: *const c_char) -> Result<Word, Fail> {
    Ok(read_str(s)?.parse::<Word>()?)
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(KwStatus::NullPointer, "null handle".into()))
}

unsafe fn write_out<T>(out: *mut *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(KwStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(KwStatus::NullPointer, "null output pointer".into()));
    }
    let c = CString::new(s).map_err(|e| Fail(KwStatus::Utf8, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next `kw_*` call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn kw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a string returned by a `kw_*` function, freed once.
#[no_mangle]
pub unsafe extern "C" fn kw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a scalar such as `"(t-1)/(alpha*beta)"`.
///
/// # Safety
/// `text` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_scalar_parse(text: *const c_char, out: *mut *mut KwScalar) -> KwStatus {
    guard(|| write_out(out, KwScalar(parse_scalar(read_str(text)?)?)))
}

/// # Safety
/// `s` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn kw_scalar_free(s: *mut KwScalar) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a valid handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_scalar_to_string(s: *const KwScalar, out: *mut *mut c_char) -> KwStatus {
    guard(|| write_string(out, borrow(s)?.0.to_string()))
}

/// # Safety
/// `s` must be a valid handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_scalar_to_json(s: *const KwScalar, out: *mut *mut c_char) -> KwStatus {
    guard(|| write_string(out, borrow(s)?.0.to_json().to_string()))
}

/// `*out = x + y`.
///
/// # Safety
/// `x`, `y` must be valid handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_scalar_add(x: *const KwScalar, y: *const KwScalar, out: *mut *mut KwScalar) -> KwStatus {
    guard(|| write_out(out, KwScalar(borrow(x)?.0.add(&borrow(y)?.0))))
}

/// `*out = x − y`.
///
/// # Safety
/// `x`, `y` must be valid handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_scalar_sub(x: *const KwScalar, y: *const KwScalar, out: *mut *mut KwScalar) -> KwStatus {
    guard(|| write_out(out, KwScalar(borrow(x)?.0.sub(&borrow(y)?.0))))
}

/// `*out = x · y`.
///
/// # Safety
/// `x`, `y` must be valid handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_scalar_mul(x: *const KwScalar, y: *const KwScalar, out: *mut *mut KwScalar) -> KwStatus {
    guard(|| write_out(out, KwScalar(borrow(x)?.0.mul(&borrow(y)?.0))))
}

/// `*out = x / y`; `KW_STATUS_DIVISION_BY_ZERO` when `y` is zero.
///
/// # Safety
/// `x`, `y` must be valid handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_scalar_div(x: *const KwScalar, y: *const KwScalar, out: *mut *mut KwScalar) -> KwStatus {
    guard(|| write_out(out, KwScalar(borrow(x)?.0.div(&borrow(y)?.0)?)))
}

/// Writes 1 to `out` when the scalars are equal, 0 otherwise.
///
/// # Safety
/// `x`, `y` must be valid handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_scalar_equal(x: *const KwScalar, y: *const KwScalar, out: *mut i32) -> KwStatus {
    guard(|| {
        let eq = borrow(x)?.0 == borrow(y)?.0;
        let out = out.as_mut().ok_or_else(|| Fail(KwStatus::NullPointer, "null output pointer".into()))?;
        *out = eq as i32;
        Ok(())
    })
}

/// The generating function `R(μ)` of a word such as `"bsos"` or `"1 0 -1 0"`.
///
/// # Safety
/// `word` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_gen_r(word: *const c_char, out: *mut *mut KwScalar) -> KwStatus {
    guard(|| write_out(out, KwScalar(gen_r(&read_word(word)?))))
}

/// The normalized generating function `R̃(μ)`.
///
/// # Safety
/// `word` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_gen_rtilde(word: *const c_char, out: *mut *mut KwScalar) -> KwStatus {
    guard(|| write_out(out, KwScalar(gen_rtilde(&read_word(word)?))))
}

/// The partition function `Z_{N,r}`.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_partition_z(n: usize, r: usize, out: *mut *mut KwScalar) -> KwStatus {
    guard(|| write_out(out, KwScalar(partition_z(n, r)?)))
}

/// The normalized partition function `Z̃_{N,r}`.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_partition_ztilde(n: usize, r: usize, out: *mut *mut KwScalar) -> KwStatus {
    guard(|| write_out(out, KwScalar(partition_ztilde(n, r)?)))
}

/// Number of rhombic staircase tableaux of the given type.
///
/// # Safety
/// `word` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_count_tableaux(word: *const c_char, out: *mut u64) -> KwStatus {
    guard(|| {
        let n = count_tableaux(&read_word(word)?);
        let out = out.as_mut().ok_or_else(|| Fail(KwStatus::NullPointer, "null output pointer".into()))?;
        *out = n;
        Ok(())
    })
}

/// Parses a Laurent polynomial in `z1..z{nvars}`, e.g. `"z1 + 1/z1"`.
///
/// # Safety
/// `text` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_laurent_parse(text: *const c_char, nvars: usize, out: *mut *mut KwLaurent) -> KwStatus {
    guard(|| write_out(out, KwLaurent(parse_laurent(read_str(text)?, nvars)?)))
}

/// # Safety
/// `p` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn kw_laurent_free(p: *mut KwLaurent) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a valid handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_laurent_to_string(p: *const KwLaurent, out: *mut *mut c_char) -> KwStatus {
    guard(|| write_string(out, borrow(p)?.0.to_string()))
}

/// # Safety
/// `p` must be a valid handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_laurent_to_json(p: *const KwLaurent, out: *mut *mut c_char) -> KwStatus {
    guard(|| write_string(out, borrow(p)?.0.to_json().to_string()))
}

/// Writes 1 to `out` when the polynomials are equal, 0 otherwise.
///
/// # Safety
/// `x`, `y` must be valid handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_laurent_equal(x: *const KwLaurent, y: *const KwLaurent, out: *mut i32) -> KwStatus {
    guard(|| {
        let eq = borrow(x)?.0 == borrow(y)?.0;
        let out = out.as_mut().ok_or_else(|| Fail(KwStatus::NullPointer, "null output pointer".into()))?;
        *out = eq as i32;
        Ok(())
    })
}

/// The ASEP polynomial `F_μ` in the parameters `α, β, γ, δ, q, t`.
///
/// # Safety
/// `word` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_asep_poly_f(word: *const c_char, out: *mut *mut KwLaurent) -> KwStatus {
    guard(|| write_out(out, KwLaurent(asep_poly_f(&read_word(word)?))))
}

/// The symmetric Koornwinder polynomial `K_λ` for a partition word `λ`.
///
/// # Safety
/// `lambda` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_koornwinder_k(lambda: *const c_char, out: *mut *mut KwLaurent) -> KwStatus {
    guard(|| write_out(out, KwLaurent(koornwinder_k(&read_word(lambda)?)?)))
}

/// `K_{(1^r, 0^{N−r})}` through its expansion in elementary symmetric
/// functions.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_koornwinder_k_via_ek(n: usize, r: usize, out: *mut *mut KwLaurent) -> KwStatus {
    guard(|| write_out(out, KwLaurent(koornwinder_k_via_ek(n, r)?)))
}

/// Checks the qKZ relations of the family of `F_μ` over the orbit of `λ`.
/// The report is written even when a check fails, in which case the status
/// is `KW_STATUS_VERIFICATION_FAILED`.
///
/// # Safety
/// `lambda` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_verify_qkz(lambda: *const c_char, out: *mut *mut KwReport) -> KwStatus {
    guard(|| finish(out, verify_qkz(&read_word(lambda)?)?))
}

/// Checks the Hecke relations of the Noumi operators on `trials` seeded
/// random Laurent polynomials with exponents in `[-degree_bound, degree_bound]`.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_verify_hecke(
    n: usize,
    trials: usize,
    degree_bound: u32,
    seed: u64,
    out: *mut *mut KwReport,
) -> KwStatus {
    guard(|| {
        if n < 2 {
            return Err(Fail(KwStatus::InvalidArgument, format!("need N >= 2, got {n}")));
        }
        let bound = i32::try_from(degree_bound).map_err(|e| Fail(KwStatus::InvalidArgument, e.to_string()))?;
        finish(out, verify_hecke_relations(n, trials, bound, seed))
    })
}

/// Runs every verification suite up to `max_n`. Informational suites are
/// included in the report but do not affect the status.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_verify_all(max_n: usize, seed: u64, out: *mut *mut KwReport) -> KwStatus {
    guard(|| {
        let mut report = Report::new();
        for s in verify_all(max_n, seed) {
            for mut e in s.report.entries {
                e.name = format!("{}: {}", s.name, e.name);
                e.passed |= s.informational;
                report.entries.push(e);
            }
        }
        finish(out, report)
    })
}

unsafe fn finish(out: *mut *mut KwReport, report: Report) -> Result<(), Fail> {
    let summary = report.failures().next().map(|f| format!("{} failed: {} {}", report.failed(), f.name, f.detail));
    write_out(out, KwReport(report))?;
    match summary {
        None => Ok(()),
        Some(msg) => Err(Fail(KwStatus::VerificationFailed, msg)),
    }
}

/// # Safety
/// `r` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn kw_report_free(r: *mut KwReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Number of entries in the report, or 0 for NULL.
///
/// # Safety
/// `r` must be NULL or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn kw_report_len(r: *const KwReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.entries.len())
}

/// 1 if every entry passed, 0 otherwise or for NULL.
///
/// # Safety
/// `r` must be NULL or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn kw_report_passed(r: *const KwReport) -> i32 {
    r.as_ref().map_or(0, |r| r.0.all_passed() as i32)
}

/// Reads entry `index`: its name, detail and whether it passed. Either
/// string output may be NULL if not wanted.
///
/// # Safety
/// `r` must be a valid handle; `passed` must be writable; `name` and
/// `detail` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn kw_report_entry(
    r: *const KwReport,
    index: usize,
    passed: *mut i32,
    name: *mut *mut c_char,
    detail: *mut *mut c_char,
) -> KwStatus {
    guard(|| {
        let r = borrow(r)?;
        let e = r.0.entries.get(index).ok_or_else(|| {
            Fail(KwStatus::InvalidArgument, format!("entry {index} out of range 0..{}", r.0.entries.len()))
        })?;
        let passed = passed.as_mut().ok_or_else(|| Fail(KwStatus::NullPointer, "null output pointer".into()))?;
        *passed = e.passed as i32;
        if !name.is_null() {
            write_string(name, e.name.clone())?;
        }
        if !detail.is_null() {
            write_string(detail, e.detail.clone())?;
        }
        Ok(())
    })
}

/// The report as text, one `PASS`/`FAIL` line per entry.
///
/// # Safety
/// `r` must be a valid handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_report_to_string(r: *const KwReport, out: *mut *mut c_char) -> KwStatus {
    guard(|| write_string(out, borrow(r)?.0.to_string()))
}

/// The report as a JSON array of `{name, passed, detail}` objects.
///
/// # Safety
/// `r` must be a valid handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_report_to_json(r: *const KwReport, out: *mut *mut c_char) -> KwStatus {
    guard(|| write_string(out, borrow(r)?.0.to_json().to_string()))
}

/// Exact stationary distribution of the sector with `r` second-class
/// particles, as a JSON object from state (`"b s o"`) to probability.
/// `params` uses the CLI syntax, e.g. `"alpha=1/2,beta=1/3,t=1/4"`.
///
/// # Safety
/// `params` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kw_asep_stationary_json(
    n: usize,
    r: usize,
    params: *const c_char,
    out: *mut *mut c_char,
) -> KwStatus {
    guard(|| {
        let p = AsepParams::parse(read_str(params)?)?;
        p.validate()?;
        let dist = stationary_exact(&build_generator(n, r, &p)?)?;
        write_string(out, dist.to_json().to_string())
    })
}
