//! Verifiers for the four named inequalities (Jensen, Hermite-Hadamard,
//! Cauchy-Schwarz, power mean) and the five worked scenarios.
//!
//! Real mode is the default (it matches the arithmetic the worked
//! computations actually perform); fractal mode is the proof-faithful
//! semantics and serves as the oracle. The two disagree for real: the
//! printed power-mean formula violates S_s <= S_t in real arithmetic, and
//! the upper Hermite-Hadamard bound fails in real mode already for x^alpha.
//! Reports always record their mode and mark any diagnostic reading.

use crate::alpha::{spow, Alpha, FractalNumber};
use crate::calc::{adaptive_simpson, lfi_expr};
use crate::convexity::Witness;
use crate::error::{Error, Result};
use crate::expr::{eval_base, eval_real, Expr, Mode};
use crate::special::{gamma1p_alpha, mittag_leffler};
use crate::Rational;

/// Structured verdict for one inequality instance. `margins` holds
/// rhs - mid and mid - lhs for a three-term inequality, or the single
/// rhs - lhs gap; `satisfied` iff every margin >= -tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub check: String,
    pub alpha: f64,
    pub mode: Mode,
    pub lhs: f64,
    pub mid: Option<f64>,
    pub rhs: f64,
    pub margins: Vec<f64>,
    pub satisfied: bool,
    pub tolerance: f64,
    pub witnesses: Vec<Witness>,
    pub notes: Option<String>,
}

impl InequalityReport {
    fn finish(mut self) -> Self {
        self.satisfied = self.margins.iter().all(|m| *m >= -self.tolerance);
        self
    }
}

/// Quadrature budget for fractal-mode Hermite-Hadamard.
const SIMPSON_TOL: f64 = 1e-10;
const SIMPSON_MAX_EVALS: usize = 1_000_000;

/// Generalized Jensen: f(sum lambda_i x_i) <= sum lambda_i^alpha f(x_i).
/// Real mode sums displayed values; fractal mode takes the fractal sum
/// (reported as its display value).
pub fn jensen(
    e: &Expr,
    xs: &[f64],
    lambdas: &[f64],
    alpha: Alpha,
    mode: Mode,
    tolerance: f64,
) -> Result<InequalityReport> {
    if xs.len() != lambdas.len() || xs.is_empty() {
        return Err(Error::Precondition(
            "xs and lambdas must be nonempty and of equal length".into(),
        ));
    }
    if lambdas.iter().any(|l| !(0.0..=1.0).contains(l)) {
        return Err(Error::WeightSum(lambdas.iter().sum()));
    }
    let sum: f64 = lambdas.iter().sum();
    if (sum - 1.0).abs() > 1e-12 {
        return Err(Error::WeightSum(sum));
    }
    let mix: f64 = xs.iter().zip(lambdas).map(|(x, l)| l * x).sum();
    let lhs = eval_real(e, mix, alpha)?;
    let rhs = match mode {
        Mode::Real => {
            let mut acc = 0.0;
            for (x, l) in xs.iter().zip(lambdas) {
                acc += spow(*l, alpha.value()) * eval_real(e, *x, alpha)?;
            }
            acc
        }
        Mode::Fractal => {
            // fractal sum of lambda_i^alpha (x) f(x_i): bases lambda_i * phi(x_i)
            let mut acc = FractalNumber::zero(alpha);
            for (x, l) in xs.iter().zip(lambdas) {
                let term = FractalNumber::from_base(l * eval_base(e, *x)?, alpha);
                acc = acc.add(term)?;
            }
            acc.value()
        }
    };
    let lhs = match mode {
        Mode::Real => lhs,
        Mode::Fractal => FractalNumber::from_base(eval_base(e, mix)?, alpha).value(),
    };
    Ok(InequalityReport {
        check: "jensen".into(),
        alpha: alpha.value(),
        mode,
        lhs,
        mid: None,
        rhs,
        margins: vec![rhs - lhs],
        satisfied: false,
        tolerance,
        witnesses: vec![],
        notes: None,
    }
    .finish())
}

/// Generalized Hermite-Hadamard triple
/// f((a+b)/2) <= Gamma(1+alpha)/(b-a)^alpha aI_b f <= (f(a)+f(b))/2^alpha.
///
/// Real mode needs the integrand anchored at `a` (alpha-polynomial basis) or
/// the Mittag-Leffler atom; fractal mode integrates the base image with
/// adaptive Simpson and the middle term becomes (classical mean of the
/// base)^alpha.
pub fn hermite_hadamard(
    e: &Expr,
    a: f64,
    b: f64,
    alpha: Alpha,
    mode: Mode,
    tolerance: f64,
) -> Result<InequalityReport> {
    if !(a < b) {
        return Err(Error::Precondition("need a < b".into()));
    }
    let g1 = gamma1p_alpha(Rational::from_integer(1), alpha)?;
    let (lhs, mid, rhs) = match mode {
        Mode::Real => {
            let lhs = eval_real(e, (a + b) / 2.0, alpha)?;
            let integral = lfi_expr(e, a, b, alpha)?;
            let mid = g1 / (b - a).powf(alpha.value()) * integral;
            let rhs = (eval_real(e, a, alpha)? + eval_real(e, b, alpha)?)
                / 2f64.powf(alpha.value());
            (lhs, mid, rhs)
        }
        Mode::Fractal => {
            let phi = |x: f64| eval_base(e, x);
            let integral = adaptive_simpson(&phi, a, b, SIMPSON_TOL, SIMPSON_MAX_EVALS)?;
            let mid = spow(integral / (b - a), alpha.value());
            let lhs = spow(phi((a + b) / 2.0)?, alpha.value());
            // (f(a) + f(b)) / 2^alpha in alpha-type arithmetic: base mean
            let rhs = spow((phi(a)? + phi(b)?) / 2.0, alpha.value());
            (lhs, mid, rhs)
        }
    };
    Ok(InequalityReport {
        check: "hermite_hadamard".into(),
        alpha: alpha.value(),
        mode,
        lhs,
        mid: Some(mid),
        rhs,
        margins: vec![rhs - mid, mid - lhs],
        satisfied: false,
        tolerance,
        witnesses: vec![],
        notes: None,
    }
    .finish())
}

/// Generalized Cauchy-Schwarz:
/// sum |a_k|^alpha |b_k|^alpha <= (sum |a_k|^(2 alpha))^(1/2) (sum |b_k|^(2 alpha))^(1/2).
/// Zero entries are accepted and flagged (the source statement assumes
/// strictly positive magnitudes).
pub fn cauchy_schwarz(
    avec: &[f64],
    bvec: &[f64],
    alpha: Alpha,
    tolerance: f64,
) -> Result<InequalityReport> {
    if avec.len() != bvec.len() || avec.is_empty() {
        return Err(Error::Precondition(
            "vectors must be nonempty and of equal length".into(),
        ));
    }
    let al = alpha.value();
    let mut lhs = 0.0;
    let mut sa = 0.0;
    let mut sb = 0.0;
    let mut zeros = Vec::new();
    for (i, (x, y)) in avec.iter().zip(bvec).enumerate() {
        if *x == 0.0 || *y == 0.0 {
            zeros.push(i);
        }
        lhs += x.abs().powf(al) * y.abs().powf(al);
        sa += x.abs().powf(2.0 * al);
        sb += y.abs().powf(2.0 * al);
    }
    let rhs = sa.sqrt() * sb.sqrt();
    let notes = if zeros.is_empty() {
        None
    } else {
        Some(format!(
            "zero entries at indices {zeros:?} (limit case of the positivity hypothesis)"
        ))
    };
    Ok(InequalityReport {
        check: "cauchy_schwarz".into(),
        alpha: al,
        mode: Mode::Real,
        lhs,
        mid: None,
        rhs,
        margins: vec![rhs - lhs],
        satisfied: false,
        tolerance,
        witnesses: vec![],
        notes,
    }
    .finish())
}

/// Power mean S_r = ((a_1^(alpha r) + ... + a_n^(alpha r))/n^alpha)^(1/r).
///
/// Fractal mode (canonical) takes the sums in alpha-type arithmetic, which
/// collapses to S_r = (classical power mean M_r)^alpha. Real mode computes
/// the formula as literally printed with real sums; that reading violates
/// the monotonicity chain and is kept as a diagnostic.
pub fn power_mean(data: &[f64], r: f64, alpha: Alpha, mode: Mode) -> Result<f64> {
    if data.is_empty() {
        return Err(Error::Precondition("data must be nonempty".into()));
    }
    if data.iter().any(|a| *a <= 0.0) {
        return Err(Error::Precondition("data must be strictly positive".into()));
    }
    if r == 0.0 {
        return Err(Error::Precondition("r must be nonzero".into()));
    }
    let n = data.len() as f64;
    let al = alpha.value();
    Ok(match mode {
        Mode::Fractal => {
            let m_r = (data.iter().map(|a| a.powf(r)).sum::<f64>() / n).powf(1.0 / r);
            m_r.powf(al)
        }
        Mode::Real => {
            let s = data.iter().map(|a| a.powf(al * r)).sum::<f64>() / n.powf(al);
            s.powf(1.0 / r)
        }
    })
}

/// The chain S_s <= S_t for s < t (both positive or both negative).
pub fn power_mean_compare(
    data: &[f64],
    s: f64,
    t: f64,
    alpha: Alpha,
    mode: Mode,
    tolerance: f64,
) -> Result<InequalityReport> {
    if !(s < t) {
        return Err(Error::Precondition("need s < t".into()));
    }
    if !((0.0 < s && 0.0 < t) || (s < 0.0 && t < 0.0)) {
        return Err(Error::Precondition(
            "need 0 < s < t or s < t < 0".into(),
        ));
    }
    let ss = power_mean(data, s, alpha, mode)?;
    let st = power_mean(data, t, alpha, mode)?;
    let notes = match mode {
        Mode::Real => Some(
            "diagnostic: the literal real-arithmetic formula can violate S_s <= S_t".to_string(),
        ),
        Mode::Fractal => None,
    };
    Ok(InequalityReport {
        check: "power_mean".into(),
        alpha: alpha.value(),
        mode,
        lhs: ss,
        mid: None,
        rhs: st,
        margins: vec![st - ss],
        satisfied: false,
        tolerance,
        witnesses: vec![],
        notes,
    }
    .finish())
}

/// Inputs of the five worked scenarios; the variant selects the scenario.
#[derive(Debug, Clone, PartialEq)]
pub enum ExampleInputs {
    /// a, b > 0 with a^(3 alpha) + b^(3 alpha) <= 2^alpha; verifies a + b <= 2.
    E51 { a: f64, b: f64 },
    /// Midpoint inequality for the Mittag-Leffler function at (x, y).
    E52 { x: f64, y: f64 },
    /// Power-mean chain on the data for orders s < t.
    E53 {
        data: Vec<f64>,
        s: f64,
        t: f64,
        mode: Mode,
    },
    /// a, b, c > 0 summing to 1; verifies the Jensen bound
    /// 10^(10 alpha)/3^(9 alpha) for sum (x + 1/x)^(10 alpha).
    E54 { a: f64, b: f64, c: f64 },
    /// a, b, c, d > 0 with c^(2 alpha) + d^(2 alpha) = (a^(2 alpha)+b^(2 alpha))^3;
    /// verifies a^(3 alpha)/c^alpha + b^(3 alpha)/d^alpha >= 1.
    E55 { a: f64, b: f64, c: f64, d: f64 },
}

impl ExampleInputs {
    pub fn id(&self) -> &'static str {
        match self {
            ExampleInputs::E51 { .. } => "5.1",
            ExampleInputs::E52 { .. } => "5.2",
            ExampleInputs::E53 { .. } => "5.3",
            ExampleInputs::E54 { .. } => "5.4",
            ExampleInputs::E55 { .. } => "5.5",
        }
    }

    /// Built-in instance for a scenario: the boundary case for 5.1, the
    /// equality case for 5.5, the symmetric point for 5.4.
    pub fn default_for(id: &str, alpha: Alpha) -> Result<ExampleInputs> {
        let al = alpha.value();
        Ok(match id {
            "5.1" => {
                let a = 2f64.powf((al - 1.0) / (3.0 * al));
                ExampleInputs::E51 { a, b: a }
            }
            "5.2" => ExampleInputs::E52 { x: 1.0, y: 2.0 },
            "5.3" => ExampleInputs::E53 {
                data: vec![1.0, 2.0, 3.0],
                s: 1.0,
                t: 2.0,
                mode: Mode::Fractal,
            },
            "5.4" => ExampleInputs::E54 {
                a: 1.0 / 3.0,
                b: 1.0 / 3.0,
                c: 1.0 / 3.0,
            },
            "5.5" => {
                let c = 2f64.powf(1.0 / al);
                ExampleInputs::E55 {
                    a: 1.0,
                    b: 1.0,
                    c,
                    d: c,
                }
            }
            other => {
                return Err(Error::Precondition(format!(
                    "unknown example id `{other}` (expected 5.1..5.5)"
                )))
            }
        })
    }
}

/// Run one worked scenario. Precondition violations name the constraint.
pub fn run_example(
    inputs: &ExampleInputs,
    alpha: Alpha,
    tolerance: f64,
) -> Result<InequalityReport> {
    let al = alpha.value();
    match inputs {
        ExampleInputs::E51 { a, b } => {
            if *a <= 0.0 || *b <= 0.0 {
                return Err(Error::Precondition("5.1 needs a, b > 0".into()));
            }
            let constraint = a.powf(3.0 * al) + b.powf(3.0 * al);
            let cap = 2f64.powf(al);
            if constraint > cap + 1e-9 {
                return Err(Error::Precondition(format!(
                    "5.1 constraint a^(3a)+b^(3a) <= 2^a violated: {constraint} > {cap}"
                )));
            }
            let lhs = a + b;
            Ok(InequalityReport {
                check: "example_5.1".into(),
                alpha: al,
                mode: Mode::Real,
                lhs,
                mid: None,
                rhs: 2.0,
                margins: vec![2.0 - lhs],
                satisfied: false,
                tolerance,
                witnesses: vec![],
                notes: None,
            }
            .finish())
        }
        ExampleInputs::E52 { x, y } => {
            let lhs = mittag_leffler(alpha, (x + y) / 2.0)?;
            let rhs = (mittag_leffler(alpha, *x)? + mittag_leffler(alpha, *y)?)
                / 2f64.powf(al);
            Ok(InequalityReport {
                check: "example_5.2".into(),
                alpha: al,
                mode: Mode::Real,
                lhs,
                mid: None,
                rhs,
                margins: vec![rhs - lhs],
                satisfied: false,
                tolerance,
                witnesses: vec![],
                notes: None,
            }
            .finish())
        }
        ExampleInputs::E53 { data, s, t, mode } => {
            let mut rep = power_mean_compare(data, *s, *t, alpha, *mode, tolerance)?;
            rep.check = "example_5.3".into();
            Ok(rep)
        }
        ExampleInputs::E54 { a, b, c } => {
            if *a <= 0.0 || *b <= 0.0 || *c <= 0.0 {
                return Err(Error::Precondition("5.4 needs a, b, c > 0".into()));
            }
            if (a + b + c - 1.0).abs() > 1e-12 {
                return Err(Error::Precondition(format!(
                    "5.4 constraint a+b+c = 1 violated: sum = {}",
                    a + b + c
                )));
            }
            let f = |x: f64| (x + 1.0 / x).powf(10.0 * al);
            let achieved = f(*a) + f(*b) + f(*c);
            let bound = 10f64.powf(10.0 * al) / 3f64.powf(9.0 * al);
            let at_symmetric = 3.0 * (10f64 / 3.0).powf(10.0 * al);
            Ok(InequalityReport {
                check: "example_5.4".into(),
                alpha: al,
                mode: Mode::Real,
                lhs: bound,
                mid: Some(at_symmetric),
                rhs: achieved,
                margins: vec![achieved - bound],
                satisfied: false,
                tolerance,
                witnesses: vec![],
                notes: Some(format!(
                    "Jensen bound {bound}; value at a=b=c=1/3 is {at_symmetric}; the bound is attained only at alpha=1 (gap {})",
                    at_symmetric - bound
                )),
            }
            .finish())
        }
        ExampleInputs::E55 { a, b, c, d } => {
            if *a <= 0.0 || *b <= 0.0 || *c <= 0.0 || *d <= 0.0 {
                return Err(Error::Precondition("5.5 needs a, b, c, d > 0".into()));
            }
            let lhs_c = c.powf(2.0 * al) + d.powf(2.0 * al);
            let rhs_c = (a.powf(2.0 * al) + b.powf(2.0 * al)).powi(3);
            if ((lhs_c - rhs_c) / rhs_c).abs() > 1e-9 {
                return Err(Error::Precondition(format!(
                    "5.5 constraint c^(2a)+d^(2a) = (a^(2a)+b^(2a))^3 violated: {lhs_c} vs {rhs_c}"
                )));
            }
            let value = a.powf(3.0 * al) / c.powf(al) + b.powf(3.0 * al) / d.powf(al);
            Ok(InequalityReport {
                check: "example_5.5".into(),
                alpha: al,
                mode: Mode::Real,
                lhs: 1.0,
                mid: None,
                rhs: value,
                margins: vec![value - 1.0],
                satisfied: false,
                tolerance,
                witnesses: vec![],
                notes: None,
            }
            .finish())
        }
    }
}
