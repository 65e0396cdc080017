//! Generalized-convexity characterizations: the defining chord condition,
//! the slope diagnostic, monotonicity of the alpha-gradient, the supporting
//! line, and the sign of the second alpha-derivative.
//!
//! The chord condition is canonical. The slope rearrangement needs alpha-type
//! sums ((x3-x2)^alpha + (x2-x1)^alpha = (x3-x1)^alpha holds only in fractal
//! arithmetic), so in real mode the slope form is a diagnostic and reports
//! both readings. Grid verdicts mean "no violation found at this resolution"
//! and every report says which grid and mode produced it.

use crate::alpha::{spow, Alpha};
use crate::calc::{alpha_diff, alpha_diff_n};
use crate::error::{Error, Result};
use crate::expr::{eval_base, eval_real, Expr, Mode};
use crate::special::gamma1p_alpha;
use crate::Rational;

/// Outcome of a convexity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Convex,
    StrictlyConvex,
    Nonconvex,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Convex => write!(f, "convex"),
            Verdict::StrictlyConvex => write!(f, "strictly_convex"),
            Verdict::Nonconvex => write!(f, "nonconvex"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// A grid point at which an inequality was evaluated; for chord checks
/// `lambda` is the mixing weight, otherwise it is absent.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Witness {
    pub x1: f64,
    pub lambda: Option<f64>,
    pub x2: f64,
    pub lhs: f64,
    pub rhs: f64,
}

const MAX_WITNESSES: usize = 16;

/// Structured verdict with the witnesses and sampling that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexityReport {
    pub check: String,
    pub alpha: f64,
    pub mode: Mode,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub grid: String,
    pub tolerance: f64,
}

/// Chord-check sampling: n_pairs point pairs crossed with n_lambda mixing
/// weights (lambda uniform on [0,1] including the endpoints).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordGrid {
    pub n_pairs: usize,
    pub n_lambda: usize,
}

impl Default for ChordGrid {
    fn default() -> Self {
        ChordGrid {
            n_pairs: 50,
            n_lambda: 41,
        }
    }
}

/// Strictness margin for the strict chord condition; ties within it are
/// inconclusive.
pub const STRICT_DELTA: f64 = 1e-10;

/// Monotonicity slack for the derivative-based checks.
pub const DERIV_TOLERANCE: f64 = 1e-10;

/// Deterministic pair grid: the smallest m with C(m,2) >= n_pairs uniform
/// points, pairs in lexicographic order.
fn pair_grid(lo: f64, hi: f64, n_pairs: usize) -> (usize, Vec<(f64, f64)>) {
    let mut m = 2usize;
    while m * (m - 1) / 2 < n_pairs {
        m += 1;
    }
    let point = |i: usize| lo + (hi - lo) * i as f64 / (m - 1) as f64;
    let mut pairs = Vec::with_capacity(n_pairs);
    'outer: for i in 0..m {
        for j in (i + 1)..m {
            pairs.push((point(i), point(j)));
            if pairs.len() == n_pairs {
                break 'outer;
            }
        }
    }
    (m, pairs)
}

/// Definition-level check of the chord condition
/// f(lambda x1 + (1-lambda) x2) <= lambda^alpha f(x1) + (1-lambda)^alpha f(x2)
/// on the sampling grid. In fractal mode both sides are compared at the base
/// level (the right side is the fractal sum). An evaluation domain error
/// yields an inconclusive report carrying the reason.
pub fn chord_check(
    e: &Expr,
    interval: (f64, f64),
    alpha: Alpha,
    mode: Mode,
    grid: ChordGrid,
    strict: bool,
    tolerance: f64,
) -> Result<ConvexityReport> {
    let (lo, hi) = interval;
    if !(lo < hi) {
        return Err(Error::Precondition("interval must satisfy lo < hi".into()));
    }
    if grid.n_pairs == 0 || grid.n_lambda < 2 {
        return Err(Error::Precondition(
            "grid needs n_pairs >= 1 and n_lambda >= 2".into(),
        ));
    }
    let (m, pairs) = pair_grid(lo, hi, grid.n_pairs);
    let grid_desc = |verdict: &str, extra: &str| {
        format!(
            "chord on [{lo},{hi}]: {} pairs from {m} uniform points x {} lambdas{}{}; verdict={verdict}",
            pairs.len(),
            grid.n_lambda,
            if mode == Mode::Fractal { "; base-space margins" } else { "" },
            extra,
        )
    };

    let f = |x: f64| -> Result<f64> {
        match mode {
            Mode::Real => eval_real(e, x, alpha),
            Mode::Fractal => eval_base(e, x),
        }
    };

    let mut witnesses: Vec<Witness> = Vec::new();
    let mut violations = 0usize;
    let mut ties: Vec<Witness> = Vec::new();
    let mut tie_count = 0usize;

    for &(x1, x2) in &pairs {
        let (f1, f2) = match (f(x1), f(x2)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(err), _) | (_, Err(err)) => {
                return Ok(ConvexityReport {
                    check: "chord".into(),
                    alpha: alpha.value(),
                    mode,
                    verdict: Verdict::Inconclusive,
                    witnesses: vec![],
                    grid: grid_desc("inconclusive", &format!("; evaluation failed: {err}")),
                    tolerance,
                });
            }
        };
        for t in 0..grid.n_lambda {
            let lam = t as f64 / (grid.n_lambda - 1) as f64;
            let xm = lam * x1 + (1.0 - lam) * x2;
            let fm = match f(xm) {
                Ok(v) => v,
                Err(err) => {
                    return Ok(ConvexityReport {
                        check: "chord".into(),
                        alpha: alpha.value(),
                        mode,
                        verdict: Verdict::Inconclusive,
                        witnesses: vec![],
                        grid: grid_desc("inconclusive", &format!("; evaluation failed: {err}")),
                        tolerance,
                    });
                }
            };
            let rhs = match mode {
                // real: displayed values with real sums
                Mode::Real => {
                    spow(lam, alpha.value()) * f1 + spow(1.0 - lam, alpha.value()) * f2
                }
                // fractal: lambda^alpha f(x1) + (1-lambda)^alpha f(x2) has
                // base lambda*phi(x1) + (1-lambda)*phi(x2)
                Mode::Fractal => lam * f1 + (1.0 - lam) * f2,
            };
            let margin = rhs - fm;
            if margin < -tolerance {
                violations += 1;
                if witnesses.len() < MAX_WITNESSES {
                    witnesses.push(Witness {
                        x1,
                        lambda: Some(lam),
                        x2,
                        lhs: fm,
                        rhs,
                    });
                }
            } else if strict && t != 0 && t != grid.n_lambda - 1 && x1 != x2 && margin <= STRICT_DELTA
            {
                tie_count += 1;
                if ties.len() < MAX_WITNESSES {
                    ties.push(Witness {
                        x1,
                        lambda: Some(lam),
                        x2,
                        lhs: fm,
                        rhs,
                    });
                }
            }
        }
    }

    let (verdict, witnesses, extra) = if violations > 0 {
        (
            Verdict::Nonconvex,
            witnesses,
            format!("; {violations} violations"),
        )
    } else if strict {
        if tie_count > 0 {
            (
                Verdict::Inconclusive,
                ties,
                format!("; {tie_count} ties within delta={STRICT_DELTA}"),
            )
        } else {
            (Verdict::StrictlyConvex, vec![], String::new())
        }
    } else {
        (Verdict::Convex, vec![], String::new())
    };
    Ok(ConvexityReport {
        check: "chord".into(),
        alpha: alpha.value(),
        mode,
        verdict,
        witnesses,
        grid: grid_desc(&verdict.to_string(), &extra),
        tolerance,
    })
}

/// Both readings of the slope inequality
/// (f(x1)-f(x2))/(x1-x2)^alpha <= (f(x3)-f(x2))/(x3-x2)^alpha.
///
/// The real reading uses displayed values and signed powers; the fractal
/// reading compares classical secant slopes of the base image and is absent
/// when the expression has no base image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeDiag {
    pub real_lhs: f64,
    pub real_rhs: f64,
    pub real_holds: bool,
    pub fractal: Option<(f64, f64, bool)>,
}

pub fn slope_diag(e: &Expr, triple: (f64, f64, f64), alpha: Alpha) -> Result<SlopeDiag> {
    let (x1, x2, x3) = triple;
    if !(x1 < x2 && x2 < x3) {
        return Err(Error::Precondition("need x1 < x2 < x3".into()));
    }
    let a = alpha.value();
    let f1 = eval_real(e, x1, alpha)?;
    let f2 = eval_real(e, x2, alpha)?;
    let f3 = eval_real(e, x3, alpha)?;
    let real_lhs = (f1 - f2) / spow(x1 - x2, a);
    let real_rhs = (f3 - f2) / spow(x3 - x2, a);
    // equality up to round-off counts as holding
    let holds = |l: f64, r: f64| l <= r + 1e-12 * (1.0 + l.abs().max(r.abs()));
    let fractal = match (eval_base(e, x1), eval_base(e, x2), eval_base(e, x3)) {
        (Ok(b1), Ok(b2), Ok(b3)) => {
            let l = (b1 - b2) / (x1 - x2);
            let r = (b3 - b2) / (x3 - x2);
            Some((l, r, holds(l, r)))
        }
        _ => None,
    };
    Ok(SlopeDiag {
        real_lhs,
        real_rhs,
        real_holds: holds(real_lhs, real_rhs),
        fractal,
    })
}

fn sample_points(interval: (f64, f64), n: usize) -> Vec<f64> {
    let (lo, hi) = interval;
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Theorem-level check: f^(alpha) sampled at n points must be non-decreasing
/// within the derivative slack. Real mode (the symbolic derivative is a
/// displayed-value function).
pub fn grad_monotone_check(
    e: &Expr,
    interval: (f64, f64),
    alpha: Alpha,
    n: usize,
) -> Result<ConvexityReport> {
    if n < 2 {
        return Err(Error::Precondition("need n >= 2 sample points".into()));
    }
    let d = alpha_diff(e, alpha)?;
    let xs = sample_points(interval, n);
    let mut values = Vec::with_capacity(n);
    for &x in &xs {
        values.push(eval_real(&d.derivative, x, alpha)?);
    }
    let mut witnesses = Vec::new();
    for i in 0..n - 1 {
        if values[i] > values[i + 1] + DERIV_TOLERANCE && witnesses.len() < MAX_WITNESSES {
            witnesses.push(Witness {
                x1: xs[i],
                lambda: None,
                x2: xs[i + 1],
                lhs: values[i],
                rhs: values[i + 1],
            });
        }
    }
    let verdict = if witnesses.is_empty() {
        Verdict::Convex
    } else {
        Verdict::Nonconvex
    };
    Ok(ConvexityReport {
        check: "grad_monotone".into(),
        alpha: alpha.value(),
        mode: Mode::Real,
        verdict,
        grid: format!(
            "f^(alpha) at {n} uniform points on [{},{}]; verdict={verdict}",
            interval.0, interval.1
        ),
        witnesses,
        tolerance: DERIV_TOLERANCE,
    })
}

/// Supporting-line check: f(x2) >= f(x1) + f^(alpha)(x1)/Gamma(1+alpha)
/// (x2-x1)^alpha for all ordered grid pairs, signed power for x2 < x1.
pub fn support_line_check(
    e: &Expr,
    interval: (f64, f64),
    alpha: Alpha,
    n_points: usize,
) -> Result<ConvexityReport> {
    if n_points < 2 {
        return Err(Error::Precondition("need n >= 2 grid points".into()));
    }
    let d = alpha_diff(e, alpha)?;
    let g = gamma1p_alpha(Rational::from_integer(1), alpha)?;
    let xs = sample_points(interval, n_points);
    let f: Vec<f64> = xs
        .iter()
        .map(|&x| eval_real(e, x, alpha))
        .collect::<Result<_>>()?;
    let df: Vec<f64> = xs
        .iter()
        .map(|&x| eval_real(&d.derivative, x, alpha))
        .collect::<Result<_>>()?;
    let mut witnesses = Vec::new();
    let mut violations = 0usize;
    for (i, &x1) in xs.iter().enumerate() {
        for (j, &x2) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let support = f[i] + df[i] / g * spow(x2 - x1, alpha.value());
            if support > f[j] + DERIV_TOLERANCE {
                violations += 1;
                if witnesses.len() < MAX_WITNESSES {
                    witnesses.push(Witness {
                        x1,
                        lambda: None,
                        x2,
                        lhs: support,
                        rhs: f[j],
                    });
                }
            }
        }
    }
    let verdict = if violations == 0 {
        Verdict::Convex
    } else {
        Verdict::Nonconvex
    };
    Ok(ConvexityReport {
        check: "support_line".into(),
        alpha: alpha.value(),
        mode: Mode::Real,
        verdict,
        grid: format!(
            "support line over all ordered pairs of {n_points} uniform points on [{},{}]; {violations} violations; verdict={verdict}",
            interval.0, interval.1
        ),
        witnesses,
        tolerance: DERIV_TOLERANCE,
    })
}

/// Corollary-level check: sign of f^(2 alpha) on a sample. Convex when the
/// minimum stays above -tolerance; a concave-only function (non-positive
/// samples) reports nonconvex here, with the sign range recorded in the grid
/// description.
pub fn second_deriv_check(
    e: &Expr,
    interval: (f64, f64),
    alpha: Alpha,
    n: usize,
) -> Result<ConvexityReport> {
    if n < 2 {
        return Err(Error::Precondition("need n >= 2 sample points".into()));
    }
    let d2 = alpha_diff_n(e, alpha, 2)?;
    let xs = sample_points(interval, n);
    let mut witnesses = Vec::new();
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for &x in &xs {
        let v = eval_real(&d2.derivative, x, alpha)?;
        min = min.min(v);
        max = max.max(v);
        if v < -DERIV_TOLERANCE && witnesses.len() < MAX_WITNESSES {
            witnesses.push(Witness {
                x1: x,
                lambda: None,
                x2: x,
                lhs: 0.0,
                rhs: v,
            });
        }
    }
    let verdict = if min >= -DERIV_TOLERANCE {
        Verdict::Convex
    } else {
        Verdict::Nonconvex
    };
    let concave = max <= DERIV_TOLERANCE;
    Ok(ConvexityReport {
        check: "second_deriv".into(),
        alpha: alpha.value(),
        mode: Mode::Real,
        verdict,
        grid: format!(
            "f^(2 alpha) at {n} uniform points on [{},{}]: range [{min:e},{max:e}]{}; verdict={verdict}",
            interval.0,
            interval.1,
            if concave { " (also concave)" } else { "" }
        ),
        witnesses,
        tolerance: DERIV_TOLERANCE,
    })
}

/// All four characterizations side by side; disagreements are surfaced as
/// findings, never dropped.
#[derive(Debug, Clone)]
pub struct CrossCheck {
    pub reports: Vec<ConvexityReport>,
    pub agree: bool,
    pub findings: Vec<String>,
}

pub fn cross_check(
    e: &Expr,
    interval: (f64, f64),
    alpha: Alpha,
    tolerance: f64,
) -> Result<CrossCheck> {
    let chord = chord_check(
        e,
        interval,
        alpha,
        Mode::Real,
        ChordGrid::default(),
        false,
        tolerance,
    )?;
    let grad = grad_monotone_check(e, interval, alpha, 201)?;
    let support = support_line_check(e, interval, alpha, 50)?;
    let second = second_deriv_check(e, interval, alpha, 201)?;
    let reports = vec![chord, grad, support, second];
    let mut findings = Vec::new();
    let canonical = reports[0].verdict;
    for r in &reports[1..] {
        if r.verdict != canonical {
            findings.push(format!(
                "{} says {} but chord says {} (alpha={}, interval=[{},{}])",
                r.check, r.verdict, canonical, alpha, interval.0, interval.1
            ));
        }
    }
    Ok(CrossCheck {
        agree: findings.is_empty(),
        reports,
        findings,
    })
}
