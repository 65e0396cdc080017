//! Behavior tests of the C ABI from the Rust side: handle lifecycle, status
//! codes, out-parameters, string ownership, and the thread-local error slot.

#![allow(clippy::excessive_precision)]

use std::ffi::{CStr, CString};

use lfcalc_ffi::*;

fn parse(text: &str) -> *mut LfcExpr {
    let c = CString::new(text).unwrap();
    let mut out: *mut LfcExpr = std::ptr::null_mut();
    let status = unsafe { lfc_parse(c.as_ptr(), &mut out) };
    assert_eq!(status, LfcStatus::Ok, "parse `{text}`");
    assert!(!out.is_null());
    out
}

fn read_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { lfc_string_free(p) };
    s
}

#[test]
fn parse_eval_free_cycle() {
    let e = parse("x^(3a) + 2^a*x^a");
    let mut v = 0.0;
    assert_eq!(unsafe { lfc_eval_real(e, 2.0, 1.0, &mut v) }, LfcStatus::Ok);
    assert!((v - 12.0).abs() < 1e-12); // 8 + 2*2
    let mut base = 0.0;
    assert_eq!(
        unsafe { lfc_eval_fractal_base(e, 2.0, &mut base) },
        LfcStatus::Ok
    );
    assert_eq!(base, 12.0); // 2^3 + 2*2 at the base level
    unsafe { lfc_expr_free(e) };
}

#[test]
fn canonical_text_round_trips() {
    let e = parse("(x+1/x)^(10a)");
    let text = read_string(unsafe { lfc_expr_to_string(e) });
    assert_eq!(text, "(x + 1 / x)^(10a)");
    let e2 = parse(&text);
    let text2 = read_string(unsafe { lfc_expr_to_string(e2) });
    assert_eq!(text, text2);
    unsafe {
        lfc_expr_free(e);
        lfc_expr_free(e2);
    }
}

#[test]
fn derivative_taylor_and_integral() {
    let e = parse("E(x^a)");
    let mut d: *mut LfcExpr = std::ptr::null_mut();
    assert_eq!(
        unsafe { lfc_alpha_diff(e, 0.5, 2, &mut d) },
        LfcStatus::Ok
    );
    // the eigenfunction differentiates to itself
    assert_eq!(read_string(unsafe { lfc_expr_to_string(d) }), "E(x^a)");

    let mut poly: *mut LfcExpr = std::ptr::null_mut();
    let mut remainder = 0.0;
    assert_eq!(
        unsafe { lfc_taylor(e, 0.0, 2, 0.5, 0.0, 1.0, &mut poly, &mut remainder) },
        LfcStatus::Ok
    );
    let text = read_string(unsafe { lfc_expr_to_string(poly) });
    assert!(text.starts_with("1 + "), "{text}");
    assert!(remainder > 0.0);

    let mut integral = 0.0;
    assert_eq!(
        unsafe { lfc_integrate(e, 0.0, 1.0, 0.5, &mut integral) },
        LfcStatus::Ok
    );
    // E_1/2(1) - E_1/2(0) = 4.00898...
    assert!((integral - 4.0089800807622834663).abs() < 1e-10);

    unsafe {
        lfc_expr_free(e);
        lfc_expr_free(d);
        lfc_expr_free(poly);
    }
}

#[test]
fn special_functions() {
    let mut v = 0.0;
    assert_eq!(unsafe { lfc_mittag_leffler(1.0, 1.0, &mut v) }, LfcStatus::Ok);
    assert!((v - std::f64::consts::E).abs() < 1e-12);
    assert_eq!(
        unsafe { lfc_gamma1p_alpha(3, 1, 0.5, &mut v) },
        LfcStatus::Ok
    );
    assert!((v - 1.3293403881791370).abs() < 1e-13);
    assert_eq!(unsafe { lfc_gamma_ratio(3, 1, 1.0, &mut v) }, LfcStatus::Ok);
    assert_eq!(v, 3.0);
    assert_eq!(lfc_spow(-4.0, 0.5), -2.0);
    // pole reporting
    assert_eq!(
        unsafe { lfc_gamma_ratio(-2, 1, 1.0, &mut v) },
        LfcStatus::GammaPole
    );
}

#[test]
fn report_json_surface() {
    let e = parse("x^(3a)");
    let mut json: *mut std::ffi::c_char = std::ptr::null_mut();
    assert_eq!(
        unsafe { lfc_hermite_hadamard_json(e, 0.0, 1.0, 0.5, false, 1e-9, &mut json) },
        LfcStatus::Ok
    );
    let text = read_string(json);
    let v: serde_json_value::Value = serde_json_value::from_str(&text);
    assert_eq!(v.get("check"), Some("\"hermite_hadamard\""));
    assert!(text.contains("\"satisfied\": true"));

    let mut json: *mut std::ffi::c_char = std::ptr::null_mut();
    assert_eq!(
        unsafe {
            lfc_chord_check_json(e, 0.0, 2.0, 0.5, false, false, 1e-9, &mut json)
        },
        LfcStatus::Ok
    );
    let text = read_string(json);
    assert!(text.contains("verdict=convex"), "{text}");

    let xs = [0.5, 1.5];
    let ws = [0.5, 0.5];
    let mut json: *mut std::ffi::c_char = std::ptr::null_mut();
    assert_eq!(
        unsafe {
            lfc_jensen_json(e, xs.as_ptr(), ws.as_ptr(), 2, 0.5, true, 1e-9, &mut json)
        },
        LfcStatus::Ok
    );
    let text = read_string(json);
    assert!(text.contains("\"mode\": \"fractal\""));

    let a = [1.0, 2.0];
    let b = [2.0, 1.0];
    let mut json: *mut std::ffi::c_char = std::ptr::null_mut();
    assert_eq!(
        unsafe { lfc_cauchy_schwarz_json(a.as_ptr(), b.as_ptr(), 2, 0.5, 1e-12, &mut json) },
        LfcStatus::Ok
    );
    let text = read_string(json);
    assert!(text.contains("\"check\": \"cauchy_schwarz\""));

    unsafe { lfc_expr_free(e) };
}

// minimal JSON probe so this test file does not need serde
mod serde_json_value {
    pub struct Value(String);
    pub fn from_str(s: &str) -> Value {
        Value(s.to_string())
    }
    impl Value {
        pub fn get(&self, key: &str) -> Option<&str> {
            let needle = format!("\"{key}\": ");
            let start = self.0.find(&needle)? + needle.len();
            let rest = &self.0[start..];
            let end = rest.find(['\n', ','])?;
            Some(rest[..end].trim())
        }
    }
}

#[test]
fn error_paths_and_last_message() {
    // null arguments
    let mut v = 0.0;
    assert_eq!(
        unsafe { lfc_eval_real(std::ptr::null(), 1.0, 0.5, &mut v) },
        LfcStatus::NullArgument
    );
    // parse errors carry a message
    let bad = CString::new("x^(").unwrap();
    let mut out: *mut LfcExpr = std::ptr::null_mut();
    assert_eq!(
        unsafe { lfc_parse(bad.as_ptr(), &mut out) },
        LfcStatus::ParseError
    );
    let msg = read_string(lfc_last_error_message());
    assert!(msg.contains("syntax error"), "{msg}");
    // a successful call clears the slot
    let e = parse("x^a");
    assert!(lfc_last_error_message().is_null());
    // invalid alpha
    assert_eq!(
        unsafe { lfc_eval_real(e, 1.0, 0.0, &mut v) },
        LfcStatus::InvalidAlpha
    );
    // rule-set errors map to their own status
    let mut d: *mut LfcExpr = std::ptr::null_mut();
    let bare = parse("x");
    assert_eq!(
        unsafe { lfc_alpha_diff(bare, 0.5, 1, &mut d) },
        LfcStatus::OutOfRuleSet
    );
    // power mean preconditions
    let data = [1.0, -1.0];
    assert_eq!(
        unsafe { lfc_power_mean(data.as_ptr(), 2, 1.0, 0.5, true, &mut v) },
        LfcStatus::Precondition
    );
    unsafe {
        lfc_expr_free(e);
        lfc_expr_free(bare);
    }
    // freeing null is a no-op
    unsafe {
        lfc_expr_free(std::ptr::null_mut());
        lfc_string_free(std::ptr::null_mut());
    }
}
