//! Evaluation of expressions in the two arithmetics.
//!
//! Real mode combines displayed values with ordinary +, *; fractal mode
//! interprets every operation on bases, which makes the base of the result
//! equal to the classical evaluation of the base-image expression
//! (Var -> x, constants -> their base, PowAlpha(u,k) -> spow(base(u), k)).
//! The Mittag-Leffler atom has no base image and is rejected in fractal mode.

use num_traits::ToPrimitive;

use crate::alpha::{spow, Alpha, FractalNumber};
use crate::error::{Error, Result};
use crate::special::mittag_leffler;
use crate::Rational;

use super::Expr;

/// Which arithmetic a check ran in; every report records it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Real,
    Fractal,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Real => write!(f, "real"),
            Mode::Fractal => write!(f, "fractal"),
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "real" => Ok(Mode::Real),
            "fractal" => Ok(Mode::Fractal),
            other => Err(Error::Precondition(format!(
                "unknown mode `{other}` (expected real or fractal)"
            ))),
        }
    }
}

/// Classical power: exact integer powers (including negative bases); spow for
/// fractional exponents, restricted to nonnegative bases.
fn classical_pow(ctx: &Expr, v: f64, r: Rational) -> Result<f64> {
    if r.is_integer() {
        let n = r
            .to_integer()
            .to_i32()
            .ok_or_else(|| Error::Precondition("exponent too large".into()))?;
        if v == 0.0 && n < 0 {
            return Err(Error::domain(ctx.to_string(), "zero base under negative power"));
        }
        return Ok(v.powi(n));
    }
    if v < 0.0 {
        return Err(Error::domain(
            ctx.to_string(),
            "negative base under non-integer classical power",
        ));
    }
    Ok(v.powf(r.to_f64().expect("rational fits in f64")))
}

/// Real-mode evaluation: displayed values with ordinary real arithmetic.
pub fn eval_real(e: &Expr, x: f64, alpha: Alpha) -> Result<f64> {
    Ok(match e {
        Expr::Const(c) => *c,
        Expr::ConstAlpha(c) => spow(*c, alpha.value()),
        Expr::Var => x,
        Expr::Add(l, r) => eval_real(l, x, alpha)? + eval_real(r, x, alpha)?,
        Expr::Sub(l, r) => eval_real(l, x, alpha)? - eval_real(r, x, alpha)?,
        Expr::Mul(l, r) => eval_real(l, x, alpha)? * eval_real(r, x, alpha)?,
        Expr::Div(l, r) => {
            let den = eval_real(r, x, alpha)?;
            if den == 0.0 {
                return Err(Error::domain(e.to_string(), "division by zero"));
            }
            eval_real(l, x, alpha)? / den
        }
        Expr::Neg(u) => -eval_real(u, x, alpha)?,
        Expr::PowAlpha(u, k) => {
            let v = eval_real(u, x, alpha)?;
            spow(v, k.to_f64().expect("rational fits in f64") * alpha.value())
        }
        Expr::PowClassical(u, r) => classical_pow(e, eval_real(u, x, alpha)?, *r)?,
        Expr::Ml => mittag_leffler(alpha, x)?,
    })
}

/// Base image of the expression at x; alpha-independent.
pub fn eval_base(e: &Expr, x: f64) -> Result<f64> {
    Ok(match e {
        Expr::Const(c) => *c,
        Expr::ConstAlpha(c) => *c,
        Expr::Var => x,
        Expr::Add(l, r) => eval_base(l, x)? + eval_base(r, x)?,
        Expr::Sub(l, r) => eval_base(l, x)? - eval_base(r, x)?,
        Expr::Mul(l, r) => eval_base(l, x)? * eval_base(r, x)?,
        Expr::Div(l, r) => {
            let den = eval_base(r, x)?;
            if den == 0.0 {
                return Err(Error::domain(e.to_string(), "division by zero"));
            }
            eval_base(l, x)? / den
        }
        Expr::Neg(u) => -eval_base(u, x)?,
        Expr::PowAlpha(u, k) => spow(eval_base(u, x)?, k.to_f64().expect("rational fits in f64")),
        Expr::PowClassical(u, r) => classical_pow(e, eval_base(u, x)?, *r)?,
        Expr::Ml => return Err(Error::FractalUnsupported(e.to_string())),
    })
}

/// Fractal-mode evaluation: operations act on bases.
pub fn eval_fractal(e: &Expr, x: f64, alpha: Alpha) -> Result<FractalNumber> {
    Ok(FractalNumber::from_base(eval_base(e, x)?, alpha))
}
