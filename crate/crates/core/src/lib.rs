//! Local fractional calculus on the fractal real line R^alpha (0 < alpha <= 1),
//! generalized convexity checks, and verifiers for the associated Jensen,
//! Hermite-Hadamard, Cauchy-Schwarz and power-mean inequalities.
//!
//! The toolkit works with functions f : I ⊆ R -> R^alpha written in a small
//! expression language (`expr`); an element a^alpha of R^alpha is stored by
//! its base a (`alpha`). Two evaluation modes exist throughout and every
//! report records which one was used:
//!
//! - **real mode**: displayed values spow(a, alpha) are combined with
//!   ordinary real arithmetic;
//! - **fractal mode**: sums and products act on bases, so
//!   a^alpha + b^alpha = (a+b)^alpha exactly.
//!
//! The two modes genuinely disagree on several of the checked inequalities
//! (the power-mean chain S_s <= S_t fails in real mode, for example); making
//! that ambiguity measurable is the point of the toolkit.
//!
//! Symbolic local fractional differentiation, anchored antiderivatives and
//! the generalized Taylor expansion live in `calc`; the convexity
//! characterizations in `convexity`; the inequality verifiers and worked
//! scenarios in `inequalities`. The `cli` module backs the `lfcalc` binary.
//!
//! Local fractional continuity has no computational counterpart and is not
//! modeled: functions are assumed continuous on the domains they are
//! evaluated over, and domain violations surface as errors.

// FractalNumber's add/sub/mul/div/neg/cmp return Result (alpha mismatch is an
// error), so the std operator traits do not fit.
#![allow(clippy::should_implement_trait)]
// `!(a < b)` in interval guards deliberately rejects NaN endpoints; `a >= b`
// would let them through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// constant folding matches on `c == 0.0` guards instead of float literal
// patterns
#![allow(clippy::redundant_guards)]
// Lanczos coefficients and frozen oracle values keep their published digits
#![allow(clippy::excessive_precision)]

pub mod alpha;
pub mod calc;
pub mod cli;
pub mod convexity;
pub mod error;
pub mod expr;
pub mod inequalities;
pub mod poly;
pub mod report;
pub mod special;

/// Exact rational exponents (the k in x^(k*alpha)).
pub type Rational = num_rational::Ratio<i64>;

pub use alpha::{spow, Alpha, FractalNumber};
pub use error::{Error, Result};
pub use expr::{eval_base, eval_fractal, eval_real, parse, Expr, Mode};
pub use poly::AlphaPolynomial;

/// Default absolute tolerance on inequality margins.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
