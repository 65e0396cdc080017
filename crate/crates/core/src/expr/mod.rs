//! Expression language for functions f : I ⊆ R -> R^alpha.
//!
//! Grammar (canonical form; `a` is the only alpha token, bound at evaluation):
//!
//! ```text
//! expr     := term (("+"|"-") term)*
//! term     := factor (("*"|"/") factor)*
//! factor   := atom ("^" "(" exponent ")")?          -- bare "^a" also accepted
//! atom     := number | "x" | "(" expr ")" | "E" "(" "x" "^" "a" ")" | "-" factor
//! exponent := rational | rational "*"? "a" | "a"
//! rational := integer ("/" integer)?
//! ```
//!
//! `number "^" "(" "a" ")"` parses as an alpha-constant (ConstAlpha);
//! `E(x^a)` is the Mittag-Leffler atom. Exponents are exact rationals so
//! Gamma(1 + k*alpha) is always computed from exact k.

mod eval;
mod parser;

use std::fmt;

use crate::Rational;

pub use eval::{eval_base, eval_fractal, eval_real, Mode};
pub use parser::parse;

/// AST of the expression language. `PowAlpha(u, k)` means spow(u, k*alpha);
/// `PowClassical(u, r)` is the alpha-free power u^r; `Ml` is E_alpha(x^alpha)
/// with the inner expression fixed to the variable.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    /// Alpha-constant c^alpha, stored by its base c.
    ConstAlpha(f64),
    Var,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    PowAlpha(Box<Expr>, Rational),
    PowClassical(Box<Expr>, Rational),
    Ml,
}

impl Expr {
    /// True when the subtree contains no alpha-dependent node
    /// (PowAlpha, ConstAlpha or Ml).
    pub fn is_alpha_free(&self) -> bool {
        match self {
            Expr::Const(_) | Expr::Var => true,
            Expr::ConstAlpha(_) | Expr::Ml | Expr::PowAlpha(..) => false,
            Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) | Expr::Div(l, r) => {
                l.is_alpha_free() && r.is_alpha_free()
            }
            Expr::Neg(u) => u.is_alpha_free(),
            Expr::PowClassical(u, _) => u.is_alpha_free(),
        }
    }

    /// True when the subtree depends on the variable (Var or Ml).
    pub fn contains_var(&self) -> bool {
        match self {
            Expr::Var | Expr::Ml => true,
            Expr::Const(_) | Expr::ConstAlpha(_) => false,
            Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) | Expr::Div(l, r) => {
                l.contains_var() || r.contains_var()
            }
            Expr::Neg(u) => u.contains_var(),
            Expr::PowAlpha(u, _) | Expr::PowClassical(u, _) => u.contains_var(),
        }
    }

    // -- smart constructors with constant folding (used by the derivative
    //    engines; no simplification beyond folding literals) --

    pub(crate) fn add(l: Expr, r: Expr) -> Expr {
        match (l, r) {
            (Expr::Const(a), Expr::Const(b)) => Expr::Const(a + b),
            (Expr::Const(z), r) if z == 0.0 => r,
            (l, Expr::Const(z)) if z == 0.0 => l,
            (l, r) => Expr::Add(Box::new(l), Box::new(r)),
        }
    }

    pub(crate) fn sub(l: Expr, r: Expr) -> Expr {
        match (l, r) {
            (Expr::Const(a), Expr::Const(b)) => Expr::Const(a - b),
            (l, Expr::Const(z)) if z == 0.0 => l,
            (Expr::Const(z), r) if z == 0.0 => Expr::neg(r),
            (l, r) => Expr::Sub(Box::new(l), Box::new(r)),
        }
    }

    pub(crate) fn mul(l: Expr, r: Expr) -> Expr {
        match (l, r) {
            (Expr::Const(a), Expr::Const(b)) => Expr::Const(a * b),
            (Expr::Const(z), _) | (_, Expr::Const(z)) if z == 0.0 => Expr::Const(0.0),
            (Expr::Const(o), r) if o == 1.0 => r,
            (l, Expr::Const(o)) if o == 1.0 => l,
            (l, r) => Expr::Mul(Box::new(l), Box::new(r)),
        }
    }

    pub(crate) fn div(l: Expr, r: Expr) -> Expr {
        match (l, r) {
            (l, Expr::Const(o)) if o == 1.0 => l,
            (Expr::Const(z), r) if z == 0.0 && r != Expr::Const(0.0) => Expr::Const(0.0),
            (l, r) => Expr::Div(Box::new(l), Box::new(r)),
        }
    }

    pub(crate) fn neg(u: Expr) -> Expr {
        match u {
            Expr::Const(c) => Expr::Const(-c),
            Expr::Neg(inner) => *inner,
            u => Expr::Neg(Box::new(u)),
        }
    }

    /// spow(u, k*alpha); folds the alpha-independent cases k = 0, u = 0, u = 1.
    pub(crate) fn pow_alpha(u: Expr, k: Rational) -> Expr {
        if k == Rational::from_integer(0) {
            return Expr::Const(1.0);
        }
        match u {
            Expr::Const(c) if c == 1.0 => Expr::Const(1.0),
            Expr::Const(c) if c == 0.0 => Expr::Const(0.0),
            u => Expr::PowAlpha(Box::new(u), k),
        }
    }

    pub(crate) fn pow_classical(u: Expr, r: Rational) -> Expr {
        if r == Rational::from_integer(0) {
            return Expr::Const(1.0);
        }
        if r == Rational::from_integer(1) {
            return u;
        }
        match u {
            Expr::Const(c) if c == 1.0 => Expr::Const(1.0),
            u => Expr::PowClassical(Box::new(u), r),
        }
    }

    fn fmt_rational(k: Rational) -> String {
        if k.is_integer() {
            format!("{}", k.numer())
        } else {
            format!("{}/{}", k.numer(), k.denom())
        }
    }

    fn fmt_alpha_exponent(k: Rational) -> String {
        if k == Rational::from_integer(1) {
            "a".to_string()
        } else {
            format!("{}a", Self::fmt_rational(k))
        }
    }

    // precedence: 1 add/sub, 2 mul/div, 3 neg, 4 pow, 5 atoms
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::PowAlpha(..) | Expr::PowClassical(..) | Expr::ConstAlpha(_) => 4,
            Expr::Const(_) | Expr::Var | Expr::Ml => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::ConstAlpha(c) => write!(f, "{c}^(a)"),
            Expr::Var => write!(f, "x"),
            Expr::Ml => write!(f, "E(x^a)"),
            Expr::Add(l, r) => {
                self.write_operand(f, l, 1, false)?;
                write!(f, " + ")?;
                self.write_operand(f, r, 1, true)
            }
            Expr::Sub(l, r) => {
                self.write_operand(f, l, 1, false)?;
                write!(f, " - ")?;
                self.write_operand(f, r, 1, true)
            }
            Expr::Mul(l, r) => {
                self.write_operand(f, l, 2, false)?;
                write!(f, " * ")?;
                self.write_operand(f, r, 2, true)
            }
            Expr::Div(l, r) => {
                self.write_operand(f, l, 2, false)?;
                write!(f, " / ")?;
                self.write_operand(f, r, 2, true)
            }
            Expr::Neg(u) => {
                write!(f, "-")?;
                // the negated operand must be a factor
                if u.precedence() <= 2 {
                    write!(f, "({u})")
                } else {
                    write!(f, "{u}")
                }
            }
            Expr::PowAlpha(u, k) => {
                Self::write_pow_base(f, u)?;
                write!(f, "^({})", Self::fmt_alpha_exponent(*k))
            }
            Expr::PowClassical(u, r) => {
                Self::write_pow_base(f, u)?;
                write!(f, "^({})", Self::fmt_rational(*r))
            }
        }
    }

    fn write_operand(
        &self,
        f: &mut fmt::Formatter<'_>,
        operand: &Expr,
        level: u8,
        is_right: bool,
    ) -> fmt::Result {
        // left operands chain at equal precedence; right operands need parens
        // at equal precedence to preserve left associativity
        let needs = if is_right {
            operand.precedence() <= level
        } else {
            operand.precedence() < level
        };
        if needs {
            write!(f, "({operand})")
        } else {
            write!(f, "{operand}")
        }
    }

    /// A power base must be an atom; only Var and Ml print bare. A literal
    /// number is parenthesized so it is not re-parsed as an alpha-constant.
    fn write_pow_base(f: &mut fmt::Formatter<'_>, u: &Expr) -> fmt::Result {
        match u {
            Expr::Var | Expr::Ml => write!(f, "{u}"),
            _ => write!(f, "({u})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}
