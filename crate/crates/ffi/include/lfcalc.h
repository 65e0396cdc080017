#ifndef LFCALC_H
#define LFCALC_H

/* Generated by cbindgen from lfcalc-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code of every fallible call.
typedef enum {
  LFC_STATUS_OK = 0,
  // A pointer argument was null.
  LFC_STATUS_NULL_ARGUMENT = 1,
  // Input text was not valid UTF-8.
  LFC_STATUS_INVALID_UTF8 = 2,
  // Expression text failed to parse.
  LFC_STATUS_PARSE_ERROR = 3,
  // The fractal order must satisfy 0 < alpha <= 1.
  LFC_STATUS_INVALID_ALPHA = 4,
  // Evaluation outside the natural domain (division by zero, bad anchor, ...).
  LFC_STATUS_DOMAIN_ERROR = 5,
  // Gamma evaluated at a pole.
  LFC_STATUS_GAMMA_POLE = 6,
  // A value left the double range.
  LFC_STATUS_OVERFLOW = 7,
  // Derivative rule set exhausted or unsupported in fractal mode.
  LFC_STATUS_OUT_OF_RULE_SET = 8,
  // An operation precondition was violated.
  LFC_STATUS_PRECONDITION = 9,
} LfcStatus;

// Opaque expression handle.
typedef struct LfcExpr LfcExpr;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the most recent failure on this thread, or null when the last
// call succeeded. The caller owns the string; free with `lfc_string_free`.
char *lfc_last_error_message(void);

// Release a string returned by this library.
//
// # Safety
// `s` must have been returned by an `lfc_` function and not freed before.
void lfc_string_free(char *s);

// Parse expression text into a handle. On success writes the handle to
// `out` (release with `lfc_expr_free`).
//
// # Safety
// `text` must point to a NUL-terminated string; `out` must be a valid
// pointer to pointer.
LfcStatus lfc_parse(const char *text, LfcExpr **out);

// Release an expression handle.
//
// # Safety
// `expr` must have come from this library and not be freed twice.
void lfc_expr_free(LfcExpr *expr);

// Canonical text of an expression (re-parses to the same AST).
// Returns null when `expr` is null; free with `lfc_string_free`.
//
// # Safety
// `expr` must be a live handle from this library.
char *lfc_expr_to_string(const LfcExpr *expr);

// Signed power sign(u)|u|^b with spow(u, 0) = 1.
double lfc_spow(double u, double b);

// Real-mode evaluation at x.
//
// # Safety
// `expr` must be a live handle; `out` a valid pointer.
LfcStatus lfc_eval_real(const LfcExpr *expr, double x, double alpha, double *out);

// Fractal-mode evaluation at x: writes the base of the result (the display
// value is lfc_spow(base, alpha)).
//
// # Safety
// `expr` must be a live handle; `out_base` a valid pointer.
LfcStatus lfc_eval_fractal_base(const LfcExpr *expr, double x, double *out_base);

// n-fold symbolic local fractional derivative; writes a new handle.
//
// # Safety
// `expr` must be a live handle; `out` a valid pointer to pointer.
LfcStatus lfc_alpha_diff(const LfcExpr *expr, double alpha, uint32_t order, LfcExpr **out);

// Local fractional integral over [a, b] (real mode: anchored-polynomial or
// Mittag-Leffler integrands).
//
// # Safety
// `expr` must be a live handle; `out` a valid pointer.
LfcStatus lfc_integrate(const LfcExpr *expr, double a, double b, double alpha, double *out);

// The literal difference quotient Gamma(1+alpha)(f(x0+h)-f(x0))/h^alpha.
//
// # Safety
// `expr` must be a live handle; `out` a valid pointer.
LfcStatus lfc_numeric_dalpha(const LfcExpr *expr, double x0, double alpha, double h, double *out);

// Generalized Taylor expansion about x0: writes the expansion polynomial as
// a new expression handle and the remainder bound over [lo, hi].
//
// # Safety
// `expr` must be a live handle; `out_poly` and `out_remainder` valid pointers.
LfcStatus lfc_taylor(const LfcExpr *expr,
                     double x0,
                     uint32_t n,
                     double alpha,
                     double lo,
                     double hi,
                     LfcExpr **out_poly,
                     double *out_remainder);

// Mittag-Leffler function E_alpha(x^alpha).
//
// # Safety
// `out` must be a valid pointer.
LfcStatus lfc_mittag_leffler(double alpha, double x, double *out);

// Gamma(1 + (k_num/k_den) alpha).
//
// # Safety
// `out` must be a valid pointer.
LfcStatus lfc_gamma1p_alpha(int64_t k_num, int64_t k_den, double alpha, double *out);

// The power-rule factor Gamma(1+k alpha)/Gamma(1+(k-1) alpha) for
// k = k_num/k_den.
//
// # Safety
// `out` must be a valid pointer.
LfcStatus lfc_gamma_ratio(int64_t k_num, int64_t k_den, double alpha, double *out);

// Chord-condition convexity check; writes the JSON report (the same schema
// as the CLI).
//
// # Safety
// `expr` must be a live handle; `out_json` a valid pointer to pointer.
LfcStatus lfc_chord_check_json(const LfcExpr *expr,
                               double lo,
                               double hi,
                               double alpha,
                               bool fractal_mode,
                               bool strict,
                               double tolerance,
                               char **out_json);

// Generalized Jensen inequality report as JSON.
//
// # Safety
// `expr` must be a live handle; `xs` and `lambdas` must point to `n`
// doubles each; `out_json` must be a valid pointer to pointer.
LfcStatus lfc_jensen_json(const LfcExpr *expr,
                          const double *xs,
                          const double *lambdas,
                          size_t n,
                          double alpha,
                          bool fractal_mode,
                          double tolerance,
                          char **out_json);

// Generalized Hermite-Hadamard inequality report as JSON.
//
// # Safety
// `expr` must be a live handle; `out_json` a valid pointer to pointer.
LfcStatus lfc_hermite_hadamard_json(const LfcExpr *expr,
                                    double a,
                                    double b,
                                    double alpha,
                                    bool fractal_mode,
                                    double tolerance,
                                    char **out_json);

// Generalized Cauchy-Schwarz inequality report as JSON.
//
// # Safety
// `avec` and `bvec` must point to `n` doubles each; `out_json` must be a
// valid pointer to pointer.
LfcStatus lfc_cauchy_schwarz_json(const double *avec,
                                  const double *bvec,
                                  size_t n,
                                  double alpha,
                                  double tolerance,
                                  char **out_json);

// Power mean S_r of the data (fractal mode is the canonical semantics).
//
// # Safety
// `data` must point to `n` doubles; `out` must be a valid pointer.
LfcStatus lfc_power_mean(const double *data,
                         size_t n,
                         double r,
                         double alpha,
                         bool fractal_mode,
                         double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LFCALC_H */
