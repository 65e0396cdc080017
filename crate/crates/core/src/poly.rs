//! Anchored alpha-polynomials: finite sums sum_k c_k (x - c)^(k*alpha).
//!
//! This is the class with exact symbolic calculus: term-wise derivative and
//! antiderivative through the Gamma-ratio power rule, exact integrals via the
//! fundamental theorem, and exact generalized Taylor expansions.

use num_traits::ToPrimitive;

use crate::alpha::{spow, Alpha};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::special::{gamma1p_alpha, gamma_ratio};
use crate::Rational;

/// sum of c_k (x - anchor)^(k*alpha); exponent multipliers k are exact
/// rationals, strictly increasing, k >= 0.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaPolynomial {
    anchor: f64,
    terms: Vec<(Rational, f64)>,
}

impl AlphaPolynomial {
    /// Build from (k, coefficient) pairs; sorts by k and merges duplicates.
    pub fn new(anchor: f64, terms: Vec<(Rational, f64)>) -> Result<Self> {
        if !anchor.is_finite() {
            return Err(Error::Precondition("anchor must be finite".into()));
        }
        let mut terms = terms;
        terms.sort_by_key(|t| t.0);
        let mut merged: Vec<(Rational, f64)> = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            if k < Rational::from_integer(0) {
                return Err(Error::Precondition(format!(
                    "alpha-polynomial exponent multipliers must be >= 0, got {k}"
                )));
            }
            if !c.is_finite() {
                return Err(Error::Precondition("coefficients must be finite".into()));
            }
            match merged.last_mut() {
                Some(last) if last.0 == k => last.1 += c,
                _ => merged.push((k, c)),
            }
        }
        Ok(AlphaPolynomial {
            anchor,
            terms: merged,
        })
    }

    pub fn constant(c: f64, anchor: f64) -> Result<Self> {
        AlphaPolynomial::new(anchor, vec![(Rational::from_integer(0), c)])
    }

    pub fn anchor(&self) -> f64 {
        self.anchor
    }

    pub fn terms(&self) -> &[(Rational, f64)] {
        &self.terms
    }

    /// Coefficient of (x-anchor)^(k*alpha), zero when the term is absent.
    pub fn coeff(&self, k: Rational) -> f64 {
        self.terms
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| *c)
            .unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(_, c)| *c == 0.0)
    }

    /// Displayed value sum c_k spow(x - anchor, k*alpha).
    pub fn eval(&self, x: f64, alpha: Alpha) -> f64 {
        let t = x - self.anchor;
        self.terms
            .iter()
            .map(|(k, c)| c * spow(t, k.to_f64().expect("rational fits in f64") * alpha.value()))
            .sum()
    }

    /// Base image sum c_k spow(x - anchor, k) (classical polynomial when the
    /// multipliers are integers).
    pub fn eval_base(&self, x: f64) -> f64 {
        let t = x - self.anchor;
        self.terms
            .iter()
            .map(|(k, c)| c * spow(t, k.to_f64().expect("rational fits in f64")))
            .sum()
    }

    /// Term-wise antiderivative: c (x-a)^(k alpha) maps to
    /// c Gamma(1+k alpha)/Gamma(1+(k+1) alpha) (x-a)^((k+1) alpha).
    /// The result is anchored at the same point and vanishes there.
    pub fn alpha_antiderivative(&self, alpha: Alpha) -> Result<AlphaPolynomial> {
        let one = Rational::from_integer(1);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            let factor = gamma1p_alpha(*k, alpha)? / gamma1p_alpha(*k + one, alpha)?;
            terms.push((*k + one, c * factor));
        }
        AlphaPolynomial::new(self.anchor, terms)
    }

    /// Term-wise alpha-derivative by the power rule; the constant term drops.
    /// Multipliers in (0,1) would leave the class (negative exponent) and are
    /// rejected.
    pub fn alpha_derivative(&self, alpha: Alpha) -> Result<AlphaPolynomial> {
        let zero = Rational::from_integer(0);
        let one = Rational::from_integer(1);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            if *k == zero {
                continue;
            }
            if *k < one {
                return Err(Error::OutOfRuleSet(format!(
                    "alpha-derivative of exponent multiplier {k} leaves the k >= 0 class"
                )));
            }
            terms.push((*k - one, c * gamma_ratio(*k, alpha)?));
        }
        AlphaPolynomial::new(self.anchor, terms)
    }

    /// Re-anchor by binomial expansion of the base polynomial; only defined
    /// for integer exponent multipliers. Exact as a base image on
    /// x >= new_anchor; on the left of the new anchor the signed-power
    /// reading of even-power terms deviates from the classical expansion.
    pub fn re_anchor(&self, new_anchor: f64) -> Result<AlphaPolynomial> {
        let shift = new_anchor - self.anchor; // (x - a) = (x - b) + (b - a)
        let mut out: Vec<(Rational, f64)> = Vec::new();
        for (k, c) in &self.terms {
            if !k.is_integer() {
                return Err(Error::Precondition(format!(
                    "re-anchoring needs integer exponent multipliers, got {k}"
                )));
            }
            let n = k
                .to_integer()
                .to_usize()
                .ok_or_else(|| Error::Precondition("exponent too large".into()))?;
            // (t + shift)^n = sum_j C(n,j) shift^(n-j) t^j
            let mut binom = 1.0f64;
            for j in 0..=n {
                if j > 0 {
                    binom = binom * (n - j + 1) as f64 / j as f64;
                }
                let coeff = c * binom * shift.powi((n - j) as i32);
                out.push((Rational::from_integer(j as i64), coeff));
            }
        }
        AlphaPolynomial::new(new_anchor, out)
    }

    /// Exact integral of the base image over [a, b] (any anchor, either
    /// orientation). The antiderivative of spow(t, k) is |t|^(k+1)/(k+1)
    /// for k > 0 and t for the constant term.
    pub fn base_integral(&self, a: f64, b: f64) -> Result<f64> {
        let zero = Rational::from_integer(0);
        let one = Rational::from_integer(1);
        let mut total = 0.0;
        let ta = a - self.anchor;
        let tb = b - self.anchor;
        for (k, c) in &self.terms {
            if *k == zero {
                total += c * (tb - ta);
            } else {
                let k1 = (*k + one).to_f64().expect("rational fits in f64");
                total += c * (tb.abs().powf(k1) - ta.abs().powf(k1)) / k1;
            }
        }
        Ok(total)
    }

    /// Recognize an expression as an anchored alpha-polynomial: a linear
    /// combination of spow(x - anchor, k*alpha) powers with variable-free
    /// coefficients. Alpha is needed to evaluate alpha-constant coefficients.
    pub fn from_expr(e: &Expr, anchor: f64, alpha: Alpha) -> Result<AlphaPolynomial> {
        let mut terms = Vec::new();
        collect_terms(e, anchor, alpha, 1.0, &mut terms)?;
        AlphaPolynomial::new(anchor, terms)
    }

    /// Canonical expression form of the polynomial.
    pub fn to_expr(&self) -> Expr {
        let base = |anchor: f64| -> Expr {
            if anchor == 0.0 {
                Expr::Var
            } else {
                Expr::Sub(Box::new(Expr::Var), Box::new(Expr::Const(anchor)))
            }
        };
        let mut acc: Option<Expr> = None;
        for (k, c) in &self.terms {
            let term = if *k == Rational::from_integer(0) {
                Expr::Const(*c)
            } else if *c == 1.0 {
                Expr::PowAlpha(Box::new(base(self.anchor)), *k)
            } else {
                Expr::Mul(
                    Box::new(Expr::Const(*c)),
                    Box::new(Expr::PowAlpha(Box::new(base(self.anchor)), *k)),
                )
            };
            acc = Some(match acc {
                None => term,
                Some(prev) => Expr::Add(Box::new(prev), Box::new(term)),
            });
        }
        acc.unwrap_or(Expr::Const(0.0))
    }
}

/// True when `e` is structurally the anchored base x - anchor.
fn is_anchor_base(e: &Expr, anchor: f64) -> bool {
    match e {
        Expr::Var => anchor == 0.0,
        Expr::Sub(l, r) => {
            matches!(**l, Expr::Var) && matches!(**r, Expr::Const(c) if c == anchor)
        }
        _ => false,
    }
}

fn variable_free_value(e: &Expr, alpha: Alpha) -> Result<f64> {
    if e.contains_var() {
        return Err(Error::domain(
            e.to_string(),
            "coefficient must not depend on x",
        ));
    }
    crate::expr::eval_real(e, 0.0, alpha)
}

fn collect_terms(
    e: &Expr,
    anchor: f64,
    alpha: Alpha,
    scale: f64,
    out: &mut Vec<(Rational, f64)>,
) -> Result<()> {
    match e {
        Expr::Add(l, r) => {
            collect_terms(l, anchor, alpha, scale, out)?;
            collect_terms(r, anchor, alpha, scale, out)
        }
        Expr::Sub(l, r) => {
            collect_terms(l, anchor, alpha, scale, out)?;
            collect_terms(r, anchor, alpha, -scale, out)
        }
        Expr::Neg(u) => collect_terms(u, anchor, alpha, -scale, out),
        Expr::Const(c) => {
            out.push((Rational::from_integer(0), scale * c));
            Ok(())
        }
        Expr::ConstAlpha(c) => {
            out.push((Rational::from_integer(0), scale * spow(*c, alpha.value())));
            Ok(())
        }
        Expr::PowAlpha(u, k) if is_anchor_base(u, anchor) => {
            out.push((*k, scale));
            Ok(())
        }
        Expr::Mul(l, r) => {
            if !l.contains_var() {
                let c = variable_free_value(l, alpha)?;
                collect_terms(r, anchor, alpha, scale * c, out)
            } else if !r.contains_var() {
                let c = variable_free_value(r, alpha)?;
                collect_terms(l, anchor, alpha, scale * c, out)
            } else {
                Err(not_anchored(e, anchor))
            }
        }
        Expr::Div(l, r) if !r.contains_var() => {
            let c = variable_free_value(r, alpha)?;
            if c == 0.0 {
                return Err(Error::domain(e.to_string(), "division by zero"));
            }
            collect_terms(l, anchor, alpha, scale / c, out)
        }
        _ => Err(not_anchored(e, anchor)),
    }
}

fn not_anchored(e: &Expr, anchor: f64) -> Error {
    Error::domain(
        e.to_string(),
        format!("not an alpha-polynomial in powers of (x - {anchor})"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn al(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    fn k(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn evaluation_uses_signed_powers() {
        // 2^a + 3^a (x-1)^a + 5^a (x-1)^(2a) at alpha = 0.5
        let p = AlphaPolynomial::new(
            1.0,
            vec![
                (k(0), 2.0f64.sqrt()),
                (k(1), 3.0f64.sqrt()),
                (k(2), 5.0f64.sqrt()),
            ],
        )
        .unwrap();
        let x = 2.5f64;
        let want = 2.0f64.sqrt() + 3.0f64.sqrt() * 1.5f64.sqrt() + 5.0f64.sqrt() * 1.5;
        assert!((p.eval(x, al(0.5)) - want).abs() < 1e-14);
        // left of the anchor the signed power keeps the sign:
        // spow(-1, a) = -1 and spow(-1, 2a) = spow(-1, 1) = -1 at alpha = 0.5
        let v = p.eval(0.0, al(0.5));
        let want = 2.0f64.sqrt() - 3.0f64.sqrt() - 5.0f64.sqrt();
        assert!((v - want).abs() < 1e-14);
    }

    #[test]
    fn antiderivative_matches_power_rule() {
        // constant 1 anchored at a -> (x-a)^a / Gamma(1+a)
        let p = AlphaPolynomial::constant(1.0, 0.25).unwrap();
        let f = p.alpha_antiderivative(al(0.5)).unwrap();
        assert_eq!(f.terms().len(), 1);
        let (kk, c) = f.terms()[0];
        assert_eq!(kk, k(1));
        assert!((c - 1.0 / 0.886226925452758).abs() < 1e-14);
        assert_eq!(f.eval(0.25, al(0.5)), 0.0);

        // x^(3a) at alpha=1 -> x^4/4
        let p = AlphaPolynomial::new(0.0, vec![(k(3), 1.0)]).unwrap();
        let f = p.alpha_antiderivative(Alpha::ONE).unwrap();
        assert_eq!(f.terms()[0].0, k(4));
        assert!((f.terms()[0].1 - 0.25).abs() < 1e-15);

        // x^(3a) at alpha=0.5 -> Gamma(2.5)/Gamma(3) x^(4a) = 0.66467... x^2
        let f = p.alpha_antiderivative(al(0.5)).unwrap();
        assert!((f.terms()[0].1 - 0.6646701940895685).abs() < 1e-12);
    }

    #[test]
    fn derivative_drops_constants_and_rejects_small_fractions() {
        let p = AlphaPolynomial::new(0.0, vec![(k(0), 7.0), (k(3), 2.0)]).unwrap();
        let d = p.alpha_derivative(al(0.5)).unwrap();
        assert_eq!(d.terms().len(), 1);
        assert_eq!(d.terms()[0].0, k(2));
        assert!((d.terms()[0].1 - 2.0 * 1.3293403881791370).abs() < 1e-12);

        let q = AlphaPolynomial::new(0.0, vec![(Rational::new(1, 2), 1.0)]).unwrap();
        assert!(matches!(
            q.alpha_derivative(al(0.5)),
            Err(Error::OutOfRuleSet(_))
        ));
    }

    #[test]
    fn fundamental_round_trip() {
        let p = AlphaPolynomial::new(
            0.5,
            vec![(k(0), -2.0), (Rational::new(3, 2), 1.5), (k(4), -0.25)],
        )
        .unwrap();
        let back = p
            .alpha_antiderivative(al(0.75))
            .unwrap()
            .alpha_derivative(al(0.75))
            .unwrap();
        assert_eq!(back.terms().len(), p.terms().len());
        for ((k1, c1), (k2, c2)) in back.terms().iter().zip(p.terms()) {
            assert_eq!(k1, k2);
            assert!(((c1 - c2) / c2).abs() < 1e-13);
        }
    }

    #[test]
    fn re_anchoring_preserves_the_base_image() {
        // exact on the right of the new anchor (and everywhere for odd powers)
        let p = AlphaPolynomial::new(0.0, vec![(k(1), 2.0), (k(2), 0.5), (k(3), -1.0)]).unwrap();
        let q = p.re_anchor(1.5).unwrap();
        for &x in &[1.5, 1.8, 2.5, 3.0, 10.0] {
            let (a, b) = (p.eval_base(x), q.eval_base(x));
            assert!((a - b).abs() < 1e-10 * (1.0 + a.abs()), "x={x}: {a} vs {b}");
        }
        // an affine base image re-anchors exactly on the whole line
        let affine = AlphaPolynomial::new(0.0, vec![(k(0), 0.5), (k(1), 2.0)]).unwrap();
        let q = affine.re_anchor(1.5).unwrap();
        for &x in &[-1.0, 0.0, 0.7, 1.5, 3.0] {
            assert!((affine.eval_base(x) - q.eval_base(x)).abs() < 1e-12, "x={x}");
        }
        let frac = AlphaPolynomial::new(0.0, vec![(Rational::new(1, 2), 1.0)]).unwrap();
        assert!(frac.re_anchor(1.0).is_err());
    }

    #[test]
    fn from_expr_recognizes_anchored_polynomials() {
        let e = parse("2^a + 3*x^(2a) - x^a/2").unwrap();
        let p = AlphaPolynomial::from_expr(&e, 0.0, al(0.5)).unwrap();
        assert_eq!(p.coeff(k(0)), 2.0f64.sqrt());
        assert_eq!(p.coeff(k(2)), 3.0);
        assert_eq!(p.coeff(k(1)), -0.5);

        let anchored = parse("(x-1)^(3a)").unwrap();
        let p = AlphaPolynomial::from_expr(&anchored, 1.0, al(0.5)).unwrap();
        assert_eq!(p.coeff(k(3)), 1.0);
        // wrong anchor is rejected
        assert!(AlphaPolynomial::from_expr(&anchored, 0.0, al(0.5)).is_err());
        // non-polynomial shapes are rejected
        let bad = parse("(x+1/x)^(10a)").unwrap();
        assert!(AlphaPolynomial::from_expr(&bad, 0.0, al(0.5)).is_err());
    }

    #[test]
    fn to_expr_round_trips_through_from_expr() {
        let p = AlphaPolynomial::new(1.0, vec![(k(0), 2.0), (k(2), -3.5)]).unwrap();
        let e = p.to_expr();
        let q = AlphaPolynomial::from_expr(&e, 1.0, al(0.5)).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn base_integral_is_exact() {
        // base of x^(1a) is x; integral over [0,1] is 1/2
        let p = AlphaPolynomial::new(0.0, vec![(k(1), 1.0)]).unwrap();
        assert!((p.base_integral(0.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        // orientation flips the sign
        assert!((p.base_integral(1.0, 0.0).unwrap() + 0.5).abs() < 1e-15);
    }
}
