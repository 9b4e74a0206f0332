//! C interface to `cfgcalc`.
//!
//! Polynomials, grammars and series cross the boundary as opaque handles
//! that must be released with the matching `*_free` function. Every
//! fallible call returns a [`CfgStatus`]; on failure a description is
//! available from [`cfg_last_error`] on the same thread. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`cfg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cfgcalc::bijection::{perm_code, phi, psi};
use cfgcalc::combinat::{IncreasingTree, Permutation};
use cfgcalc::grammar::{derive_n, parse_grammar, Grammar, GrammarName};
use cfgcalc::laurent::{parse_poly, LaurentPoly};
use cfgcalc::series::{egf, TruncatedSeries};
use cfgcalc::verify::{run_suite, VerifyParams, VerifySuiteId};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfgStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    OutOfRange = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

pub struct CfgPoly {
    inner: LaurentPoly,
}

pub struct CfgGrammar {
    inner: Grammar,
}

pub struct CfgSeries {
    inner: TruncatedSeries,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let msg = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior nul"));
}

struct Fail(CfgStatus, String);

impl Fail {
    fn new(status: CfgStatus, message: impl ToString) -> Self {
        Fail(status, message.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> CfgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            CfgStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CfgStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail::new(
            CfgStatus::NullArgument,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Fail::new(CfgStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail::new(CfgStatus::NullArgument, format!("{what} is null")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::new(
            CfgStatus::NullArgument,
            format!("{what} is null"),
        ));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_u32s<'a>(data: *const u32, len: usize, what: &str) -> Result<&'a [u32], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(Fail::new(
            CfgStatus::NullArgument,
            format!("{what} is null"),
        ));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn write_u32s(values: &[u32], out: *mut u32, cap: usize) -> Result<(), Fail> {
    if cap < values.len() {
        return Err(Fail::new(
            CfgStatus::BufferTooSmall,
            format!("buffer holds {cap} values, {} needed", values.len()),
        ));
    }
    if !values.is_empty() {
        if out.is_null() {
            return Err(Fail::new(CfgStatus::NullArgument, "output buffer is null"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    }
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("no interior nul")
        .into_raw()
}

/// Message describing the most recent failure on this thread, or an empty
/// string. Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn cfg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cfg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a pointer obtained from this library.
#[no_mangle]
pub unsafe extern "C" fn cfg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a Laurent polynomial such as `x^-1*y + 3/2*x`.
///
/// # Safety
/// `src` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cfg_poly_parse(src: *const c_char, out: *mut *mut CfgPoly) -> CfgStatus {
    guard(|| {
        let text = read_str(src, "src")?;
        let inner = parse_poly(text).map_err(|e| Fail::new(CfgStatus::ParseError, e))?;
        write_out(out, Box::into_raw(Box::new(CfgPoly { inner })), "out")
    })
}

/// Canonical text of a polynomial; free the result with `cfg_string_free`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cfg_poly_to_string(p: *const CfgPoly, out: *mut *mut c_char) -> CfgStatus {
    guard(|| {
        let p = deref(p, "poly")?;
        write_out(out, owned_string(p.inner.to_string()), "out")
    })
}

/// Writes 1 to `out` if the polynomials are equal and 0 otherwise.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cfg_poly_equal(
    a: *const CfgPoly,
    b: *const CfgPoly,
    out: *mut i32,
) -> CfgStatus {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        write_out(out, i32::from(a.inner == b.inner), "out")
    })
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cfg_poly_free(p: *mut CfgPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Looks up a builtin grammar by name, e.g. `eulerian` or `stirling:3`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cfg_grammar_builtin(
    name: *const c_char,
    out: *mut *mut CfgGrammar,
) -> CfgStatus {
    guard(|| {
        let name: GrammarName = read_str(name, "name")?
            .parse()
            .map_err(|e| Fail::new(CfgStatus::InvalidInput, e))?;
        let inner = Grammar::builtin(name);
        write_out(out, Box::into_raw(Box::new(CfgGrammar { inner })), "out")
    })
}

/// Parses grammar text, one `<var> -> <polynomial>` rule per line.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cfg_grammar_parse(
    text: *const c_char,
    out: *mut *mut CfgGrammar,
) -> CfgStatus {
    guard(|| {
        let inner = parse_grammar(read_str(text, "text")?)
            .map_err(|e| Fail::new(CfgStatus::ParseError, e))?;
        write_out(out, Box::into_raw(Box::new(CfgGrammar { inner })), "out")
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cfg_grammar_free(g: *mut CfgGrammar) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// `D^n(word)` under the grammar.
///
/// # Safety
/// `g` and `word` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cfg_derive_n(
    g: *const CfgGrammar,
    word: *const CfgPoly,
    n: usize,
    out: *mut *mut CfgPoly,
) -> CfgStatus {
    guard(|| {
        let (g, w) = (deref(g, "grammar")?, deref(word, "word")?);
        let inner = derive_n(&g.inner, &w.inner, n);
        write_out(out, Box::into_raw(Box::new(CfgPoly { inner })), "out")
    })
}

/// Exponential generating function of `word` through `t^order`.
///
/// # Safety
/// `g` and `word` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cfg_egf(
    g: *const CfgGrammar,
    word: *const CfgPoly,
    order: usize,
    out: *mut *mut CfgSeries,
) -> CfgStatus {
    guard(|| {
        let (g, w) = (deref(g, "grammar")?, deref(word, "word")?);
        let inner = egf(&g.inner, &w.inner, order);
        write_out(out, Box::into_raw(Box::new(CfgSeries { inner })), "out")
    })
}

/// Truncation order of a series, or 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cfg_series_order(s: *const CfgSeries) -> usize {
    s.as_ref().map_or(0, |s| s.inner.order())
}

/// `n! * c_n` of the series as text; free with `cfg_string_free`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cfg_series_numerator(
    s: *const CfgSeries,
    n: usize,
    out: *mut *mut c_char,
) -> CfgStatus {
    guard(|| {
        let s = deref(s, "series")?;
        if n > s.inner.order() {
            return Err(Fail::new(
                CfgStatus::OutOfRange,
                format!("n = {n} exceeds order {}", s.inner.order()),
            ));
        }
        let text = s.inner.egf_numerators()[n].to_string();
        write_out(out, owned_string(text), "out")
    })
}

/// # Safety
/// `s` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cfg_series_free(s: *mut CfgSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

unsafe fn read_perm(perm: *const u32, n: usize) -> Result<Permutation, Fail> {
    Permutation::new(read_u32s(perm, n, "perm")?.to_vec())
        .map_err(|e| Fail::new(CfgStatus::InvalidInput, e))
}

/// Inversion table of the permutation `perm[0..n]` into `code_out`.
///
/// # Safety
/// `perm` must hold `n` values; `code_out` must have room for `cap`.
#[no_mangle]
pub unsafe extern "C" fn cfg_perm_code(
    perm: *const u32,
    n: usize,
    code_out: *mut u32,
    cap: usize,
) -> CfgStatus {
    guard(|| {
        let p = read_perm(perm, n)?;
        write_u32s(perm_code(&p).as_slice(), code_out, cap)
    })
}

/// Maps the permutation `perm[0..n]` to an increasing tree, written as the
/// parents of vertices `1..n` into `parents_out`.
///
/// # Safety
/// `perm` must hold `n` values; `parents_out` must have room for `cap`.
#[no_mangle]
pub unsafe extern "C" fn cfg_phi(
    perm: *const u32,
    n: usize,
    parents_out: *mut u32,
    cap: usize,
) -> CfgStatus {
    guard(|| {
        let p = read_perm(perm, n)?;
        let t = phi(&p).map_err(|e| Fail::new(CfgStatus::Panic, e))?;
        write_u32s(t.parents(), parents_out, cap)
    })
}

/// Inverse of `cfg_phi`: `parents[0..n]` are the parents of vertices `1..n`.
///
/// # Safety
/// `parents` must hold `n` values; `perm_out` must have room for `cap`.
#[no_mangle]
pub unsafe extern "C" fn cfg_psi(
    parents: *const u32,
    n: usize,
    perm_out: *mut u32,
    cap: usize,
) -> CfgStatus {
    guard(|| {
        let t = IncreasingTree::from_parents(read_u32s(parents, n, "parents")?.to_vec())
            .map_err(|e| Fail::new(CfgStatus::InvalidInput, e))?;
        let p = psi(&t).map_err(|e| Fail::new(CfgStatus::InvalidInput, e))?;
        write_u32s(p.as_slice(), perm_out, cap)
    })
}

/// Runs a verification suite (`all`, `eulerian`, `bijection`, ...).
/// Writes 1 to `passed` when every check passes, and the JSON report to
/// `report_json` when it is non-null.
///
/// # Safety
/// `suite` must be a nul-terminated string; `passed` must be writable;
/// `report_json` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cfg_verify(
    suite: *const c_char,
    max_n: usize,
    order: usize,
    passed: *mut i32,
    report_json: *mut *mut c_char,
) -> CfgStatus {
    guard(|| {
        let id: VerifySuiteId = read_str(suite, "suite")?
            .parse()
            .map_err(|e| Fail::new(CfgStatus::InvalidInput, e))?;
        let params =
            VerifyParams::new(max_n, order).map_err(|e| Fail::new(CfgStatus::OutOfRange, e))?;
        let report = run_suite(id, params).map_err(|e| Fail::new(CfgStatus::OutOfRange, e))?;
        write_out(passed, i32::from(report.all_passed()), "passed")?;
        if !report_json.is_null() {
            let json = serde_json::to_string(&report).expect("serializable");
            report_json.write(owned_string(json));
        }
        Ok(())
    })
}
