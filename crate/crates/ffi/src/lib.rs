//! C ABI for the local fractional calculus toolkit.
//!
//! Expressions travel as opaque `LfcExpr` handles created by [`lfc_parse`]
//! and released by [`lfc_expr_free`]. Every fallible call returns an
//! [`LfcStatus`] and writes its result through an out-pointer; the message
//! for the most recent failure on the current thread is available from
//! [`lfc_last_error_message`]. Strings returned by the library are
//! NUL-terminated, owned by the caller, and released with
//! [`lfc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use lfcalc::alpha::{spow, Alpha};
use lfcalc::calc::{alpha_diff_n, lfi_expr, numeric_dalpha, taylor_alpha};
use lfcalc::convexity::{chord_check, ChordGrid};
use lfcalc::expr::{eval_base, eval_real, Expr, Mode};
use lfcalc::inequalities::{cauchy_schwarz, hermite_hadamard, jensen, power_mean};
use lfcalc::report::ReportJson;
use lfcalc::special::{gamma1p_alpha, gamma_ratio, mittag_leffler};
use lfcalc::{Error, Rational};

/// Opaque expression handle.
pub struct LfcExpr {
    inner: Expr,
}

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LfcStatus {
    Ok = 0,
    /// A pointer argument was null.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Expression text failed to parse.
    ParseError = 3,
    /// The fractal order must satisfy 0 < alpha <= 1.
    InvalidAlpha = 4,
    /// Evaluation outside the natural domain (division by zero, bad anchor, ...).
    DomainError = 5,
    /// Gamma evaluated at a pole.
    GammaPole = 6,
    /// A value left the double range.
    Overflow = 7,
    /// Derivative rule set exhausted or unsupported in fractal mode.
    OutOfRuleSet = 8,
    /// An operation precondition was violated.
    Precondition = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(err: &Error) -> LfcStatus {
    let status = match err {
        Error::Syntax { .. } => LfcStatus::ParseError,
        Error::InvalidAlpha(_) => LfcStatus::InvalidAlpha,
        Error::AlphaMismatch { .. } => LfcStatus::Precondition,
        Error::DivisionByZero | Error::Domain { .. } | Error::AnchorMismatch { .. } => {
            LfcStatus::DomainError
        }
        Error::GammaPole(_) => LfcStatus::GammaPole,
        Error::Overflow => LfcStatus::Overflow,
        Error::OutOfRuleSet(_)
        | Error::NotClassicallyDifferentiable(_)
        | Error::FractalUnsupported(_) => LfcStatus::OutOfRuleSet,
        Error::WeightSum(_) | Error::Precondition(_) => LfcStatus::Precondition,
    };
    let msg = CString::new(err.to_string()).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
    status
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn out_string(s: String) -> *mut c_char {
    CString::new(s)
        .map(CString::into_raw)
        .unwrap_or(std::ptr::null_mut())
}

/// Message of the most recent failure on this thread, or null when the last
/// call succeeded. The caller owns the string; free with `lfc_string_free`.
#[no_mangle]
pub extern "C" fn lfc_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => out_string(msg.to_string_lossy().into_owned()),
        None => std::ptr::null_mut(),
    })
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must have been returned by an `lfc_` function and not freed before.
#[no_mangle]
pub unsafe extern "C" fn lfc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse expression text into a handle. On success writes the handle to
/// `out` (release with `lfc_expr_free`).
///
/// # Safety
/// `text` must point to a NUL-terminated string; `out` must be a valid
/// pointer to pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_parse(text: *const c_char, out: *mut *mut LfcExpr) -> LfcStatus {
    if text.is_null() || out.is_null() {
        return LfcStatus::NullArgument;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return LfcStatus::InvalidUtf8;
    };
    match lfcalc::parse(text) {
        Ok(expr) => {
            clear_error();
            *out = Box::into_raw(Box::new(LfcExpr { inner: expr }));
            LfcStatus::Ok
        }
        Err(e) => set_error(&e),
    }
}

/// Release an expression handle.
///
/// # Safety
/// `expr` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lfc_expr_free(expr: *mut LfcExpr) {
    if !expr.is_null() {
        drop(Box::from_raw(expr));
    }
}

/// Canonical text of an expression (re-parses to the same AST).
/// Returns null when `expr` is null; free with `lfc_string_free`.
///
/// # Safety
/// `expr` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lfc_expr_to_string(expr: *const LfcExpr) -> *mut c_char {
    if expr.is_null() {
        return std::ptr::null_mut();
    }
    out_string((*expr).inner.to_string())
}

/// Signed power sign(u)|u|^b with spow(u, 0) = 1.
#[no_mangle]
pub extern "C" fn lfc_spow(u: f64, b: f64) -> f64 {
    spow(u, b)
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return set_error(&err),
        }
    };
}

unsafe fn expr_ref<'a>(expr: *const LfcExpr) -> Option<&'a Expr> {
    expr.as_ref().map(|h| &h.inner)
}

/// Real-mode evaluation at x.
///
/// # Safety
/// `expr` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_eval_real(
    expr: *const LfcExpr,
    x: f64,
    alpha: f64,
    out: *mut f64,
) -> LfcStatus {
    let (Some(e), false) = (expr_ref(expr), out.is_null()) else {
        return LfcStatus::NullArgument;
    };
    let a = try_ffi!(Alpha::new(alpha));
    let v = try_ffi!(eval_real(e, x, a));
    clear_error();
    *out = v;
    LfcStatus::Ok
}

/// Fractal-mode evaluation at x: writes the base of the result (the display
/// value is lfc_spow(base, alpha)).
///
/// # Safety
/// `expr` must be a live handle; `out_base` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_eval_fractal_base(
    expr: *const LfcExpr,
    x: f64,
    out_base: *mut f64,
) -> LfcStatus {
    let (Some(e), false) = (expr_ref(expr), out_base.is_null()) else {
        return LfcStatus::NullArgument;
    };
    let v = try_ffi!(eval_base(e, x));
    clear_error();
    *out_base = v;
    LfcStatus::Ok
}

/// n-fold symbolic local fractional derivative; writes a new handle.
///
/// # Safety
/// `expr` must be a live handle; `out` a valid pointer to pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_alpha_diff(
    expr: *const LfcExpr,
    alpha: f64,
    order: u32,
    out: *mut *mut LfcExpr,
) -> LfcStatus {
    let (Some(e), false) = (expr_ref(expr), out.is_null()) else {
        return LfcStatus::NullArgument;
    };
    let a = try_ffi!(Alpha::new(alpha));
    let d = try_ffi!(alpha_diff_n(e, a, order));
    clear_error();
    *out = Box::into_raw(Box::new(LfcExpr {
        inner: d.derivative,
    }));
    LfcStatus::Ok
}

/// Local fractional integral over [a, b] (real mode: anchored-polynomial or
/// Mittag-Leffler integrands).
///
/// # Safety
/// `expr` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_integrate(
    expr: *const LfcExpr,
    a: f64,
    b: f64,
    alpha: f64,
    out: *mut f64,
) -> LfcStatus {
    let (Some(e), false) = (expr_ref(expr), out.is_null()) else {
        return LfcStatus::NullArgument;
    };
    let al = try_ffi!(Alpha::new(alpha));
    let v = try_ffi!(lfi_expr(e, a, b, al));
    clear_error();
    *out = v;
    LfcStatus::Ok
}

/// The literal difference quotient Gamma(1+alpha)(f(x0+h)-f(x0))/h^alpha.
///
/// # Safety
/// `expr` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_numeric_dalpha(
    expr: *const LfcExpr,
    x0: f64,
    alpha: f64,
    h: f64,
    out: *mut f64,
) -> LfcStatus {
    let (Some(e), false) = (expr_ref(expr), out.is_null()) else {
        return LfcStatus::NullArgument;
    };
    let a = try_ffi!(Alpha::new(alpha));
    let v = try_ffi!(numeric_dalpha(e, x0, a, h));
    clear_error();
    *out = v;
    LfcStatus::Ok
}

/// Generalized Taylor expansion about x0: writes the expansion polynomial as
/// a new expression handle and the remainder bound over [lo, hi].
///
/// # Safety
/// `expr` must be a live handle; `out_poly` and `out_remainder` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lfc_taylor(
    expr: *const LfcExpr,
    x0: f64,
    n: u32,
    alpha: f64,
    lo: f64,
    hi: f64,
    out_poly: *mut *mut LfcExpr,
    out_remainder: *mut f64,
) -> LfcStatus {
    let (Some(e), false, false) = (expr_ref(expr), out_poly.is_null(), out_remainder.is_null())
    else {
        return LfcStatus::NullArgument;
    };
    let a = try_ffi!(Alpha::new(alpha));
    let t = try_ffi!(taylor_alpha(e, x0, n, a, (lo, hi)));
    clear_error();
    *out_poly = Box::into_raw(Box::new(LfcExpr {
        inner: t.polynomial.to_expr(),
    }));
    *out_remainder = t.remainder_bound;
    LfcStatus::Ok
}

/// Mittag-Leffler function E_alpha(x^alpha).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_mittag_leffler(alpha: f64, x: f64, out: *mut f64) -> LfcStatus {
    if out.is_null() {
        return LfcStatus::NullArgument;
    }
    let a = try_ffi!(Alpha::new(alpha));
    let v = try_ffi!(mittag_leffler(a, x));
    clear_error();
    *out = v;
    LfcStatus::Ok
}

/// Gamma(1 + (k_num/k_den) alpha).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_gamma1p_alpha(
    k_num: i64,
    k_den: i64,
    alpha: f64,
    out: *mut f64,
) -> LfcStatus {
    if out.is_null() {
        return LfcStatus::NullArgument;
    }
    if k_den == 0 {
        return set_error(&Error::Precondition("k_den must be nonzero".into()));
    }
    let a = try_ffi!(Alpha::new(alpha));
    let v = try_ffi!(gamma1p_alpha(Rational::new(k_num, k_den), a));
    clear_error();
    *out = v;
    LfcStatus::Ok
}

/// The power-rule factor Gamma(1+k alpha)/Gamma(1+(k-1) alpha) for
/// k = k_num/k_den.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_gamma_ratio(
    k_num: i64,
    k_den: i64,
    alpha: f64,
    out: *mut f64,
) -> LfcStatus {
    if out.is_null() {
        return LfcStatus::NullArgument;
    }
    if k_den == 0 {
        return set_error(&Error::Precondition("k_den must be nonzero".into()));
    }
    let a = try_ffi!(Alpha::new(alpha));
    let v = try_ffi!(gamma_ratio(Rational::new(k_num, k_den), a));
    clear_error();
    *out = v;
    LfcStatus::Ok
}

fn mode_of(fractal: bool) -> Mode {
    if fractal {
        Mode::Fractal
    } else {
        Mode::Real
    }
}

/// Chord-condition convexity check; writes the JSON report (the same schema
/// as the CLI).
///
/// # Safety
/// `expr` must be a live handle; `out_json` a valid pointer to pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_chord_check_json(
    expr: *const LfcExpr,
    lo: f64,
    hi: f64,
    alpha: f64,
    fractal_mode: bool,
    strict: bool,
    tolerance: f64,
    out_json: *mut *mut c_char,
) -> LfcStatus {
    let (Some(e), false) = (expr_ref(expr), out_json.is_null()) else {
        return LfcStatus::NullArgument;
    };
    let a = try_ffi!(Alpha::new(alpha));
    let report = try_ffi!(chord_check(
        e,
        (lo, hi),
        a,
        mode_of(fractal_mode),
        ChordGrid::default(),
        strict,
        tolerance,
    ));
    clear_error();
    *out_json = out_string(ReportJson::from(&report).to_pretty());
    LfcStatus::Ok
}

/// Generalized Jensen inequality report as JSON.
///
/// # Safety
/// `expr` must be a live handle; `xs` and `lambdas` must point to `n`
/// doubles each; `out_json` must be a valid pointer to pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_jensen_json(
    expr: *const LfcExpr,
    xs: *const f64,
    lambdas: *const f64,
    n: usize,
    alpha: f64,
    fractal_mode: bool,
    tolerance: f64,
    out_json: *mut *mut c_char,
) -> LfcStatus {
    let (Some(e), false) = (expr_ref(expr), out_json.is_null()) else {
        return LfcStatus::NullArgument;
    };
    if xs.is_null() || lambdas.is_null() {
        return LfcStatus::NullArgument;
    }
    let xs = std::slice::from_raw_parts(xs, n);
    let ws = std::slice::from_raw_parts(lambdas, n);
    let a = try_ffi!(Alpha::new(alpha));
    let report = try_ffi!(jensen(e, xs, ws, a, mode_of(fractal_mode), tolerance));
    clear_error();
    *out_json = out_string(ReportJson::from(&report).to_pretty());
    LfcStatus::Ok
}

/// Generalized Hermite-Hadamard inequality report as JSON.
///
/// # Safety
/// `expr` must be a live handle; `out_json` a valid pointer to pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_hermite_hadamard_json(
    expr: *const LfcExpr,
    a: f64,
    b: f64,
    alpha: f64,
    fractal_mode: bool,
    tolerance: f64,
    out_json: *mut *mut c_char,
) -> LfcStatus {
    let (Some(e), false) = (expr_ref(expr), out_json.is_null()) else {
        return LfcStatus::NullArgument;
    };
    let al = try_ffi!(Alpha::new(alpha));
    let report = try_ffi!(hermite_hadamard(
        e,
        a,
        b,
        al,
        mode_of(fractal_mode),
        tolerance
    ));
    clear_error();
    *out_json = out_string(ReportJson::from(&report).to_pretty());
    LfcStatus::Ok
}

/// Generalized Cauchy-Schwarz inequality report as JSON.
///
/// # Safety
/// `avec` and `bvec` must point to `n` doubles each; `out_json` must be a
/// valid pointer to pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_cauchy_schwarz_json(
    avec: *const f64,
    bvec: *const f64,
    n: usize,
    alpha: f64,
    tolerance: f64,
    out_json: *mut *mut c_char,
) -> LfcStatus {
    if avec.is_null() || bvec.is_null() || out_json.is_null() {
        return LfcStatus::NullArgument;
    }
    let a = std::slice::from_raw_parts(avec, n);
    let b = std::slice::from_raw_parts(bvec, n);
    let al = try_ffi!(Alpha::new(alpha));
    let report = try_ffi!(cauchy_schwarz(a, b, al, tolerance));
    clear_error();
    *out_json = out_string(ReportJson::from(&report).to_pretty());
    LfcStatus::Ok
}

/// Power mean S_r of the data (fractal mode is the canonical semantics).
///
/// # Safety
/// `data` must point to `n` doubles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lfc_power_mean(
    data: *const f64,
    n: usize,
    r: f64,
    alpha: f64,
    fractal_mode: bool,
    out: *mut f64,
) -> LfcStatus {
    if data.is_null() || out.is_null() {
        return LfcStatus::NullArgument;
    }
    let d = std::slice::from_raw_parts(data, n);
    let al = try_ffi!(Alpha::new(alpha));
    let v = try_ffi!(power_mean(d, r, al, mode_of(fractal_mode)));
    clear_error();
    *out = v;
    LfcStatus::Ok
}
