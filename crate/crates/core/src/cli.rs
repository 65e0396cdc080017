//! Command-line front end: parse expressions, run calculus, convexity and
//! inequality checks, sweep alpha, emit machine-readable reports.
//!
//! Exit codes: 0 when the check is satisfied (or the computation succeeded),
//! 1 when an inequality is violated or a convexity verdict is nonconvex or
//! inconclusive, 2 on parse/domain/usage errors. Reports contain no
//! timestamps or machine info, so identical invocations are byte-identical.
//!
//! Flag precedence: command line > --config JSON file > built-in defaults.

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::alpha::{spow, Alpha};
use crate::calc::{
    adaptive_simpson, alpha_diff_n, lfi_expr, numeric_dalpha, riemann_diag, taylor_alpha,
};
use crate::convexity::{
    chord_check, grad_monotone_check, second_deriv_check, slope_diag, support_line_check,
    ChordGrid, ConvexityReport, Verdict,
};
use crate::error::{Error, Result};
use crate::expr::{eval_base, eval_fractal, eval_real, parse, Expr, Mode};
use crate::inequalities::{
    cauchy_schwarz, hermite_hadamard, jensen, power_mean_compare, run_example, ExampleInputs,
    InequalityReport,
};
use crate::report::{csv_float, render_text, ReportJson};
use crate::special::gamma1p_alpha;
use crate::{Rational, DEFAULT_TOLERANCE};

#[derive(Parser, Debug)]
#[command(
    name = "lfcalc",
    version,
    about = "Local fractional calculus, generalized convexity and inequality checks on the fractal real line"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Debug, Clone, Default)]
struct Common {
    /// Fractal order alpha (0 < alpha <= 1)
    #[arg(long)]
    alpha: Option<f64>,
    /// Evaluation mode: real | fractal
    #[arg(long)]
    mode: Option<String>,
    /// Absolute tolerance on margins
    #[arg(long)]
    tol: Option<f64>,
    /// Output format: json | csv | text
    #[arg(long)]
    format: Option<String>,
    /// Output path (default: standard output)
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON config file supplying defaults for these flags
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate an expression at a point
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        /// Evaluation point
        #[arg(long)]
        at: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Symbolic local fractional derivative (optionally evaluated at a point)
    Diff {
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        /// Number of alpha-orders to apply
        #[arg(long, default_value_t = 1)]
        order: u32,
        #[arg(long)]
        at: Option<f64>,
        /// Also evaluate the literal difference quotient at --at, with this
        /// step size (default 1e-6 when the flag is given bare)
        #[arg(long, num_args = 0..=1, default_missing_value = "1e-6")]
        quotient_h: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Local fractional integral over [--from, --to]
    Integrate {
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Generalized Taylor expansion about --x0
    Taylor {
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long)]
        x0: f64,
        /// Expansion order n
        #[arg(long)]
        n: u32,
        /// Remainder interval "lo,hi" (default: x0,x0+1)
        #[arg(long)]
        interval: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Convexity checks (chord, gradient, support line, second derivative, slope)
    Convexity {
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        /// Interval "lo,hi"
        #[arg(long)]
        interval: Option<String>,
        /// chord | grad | support | second | slope
        #[arg(long, default_value = "chord")]
        method: String,
        /// Strict chord condition
        #[arg(long)]
        strict: bool,
        /// Chord grid: number of point pairs
        #[arg(long, default_value_t = 50)]
        pairs: usize,
        /// Chord grid: number of lambda values
        #[arg(long, default_value_t = 41)]
        lambdas: usize,
        /// Sample count for derivative-based checks
        #[arg(long, default_value_t = 201)]
        points: usize,
        /// Triple "x1,x2,x3" for --method slope
        #[arg(long, allow_hyphen_values = true)]
        triple: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Verify a named inequality
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Run a built-in worked scenario (5.1 .. 5.5)
    Examples {
        #[arg(long)]
        id: String,
        /// Scenario inputs, comma-separated (see README per id)
        #[arg(long, allow_hyphen_values = true)]
        inputs: Option<String>,
        /// Power-mean lower order (5.3)
        #[arg(long, allow_hyphen_values = true)]
        s: Option<f64>,
        /// Power-mean upper order (5.3)
        #[arg(long, allow_hyphen_values = true)]
        t: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep a check over an alpha range and emit CSV
    Sweep {
        /// hh | jensen | cs | powermean | riemann-diag
        #[arg(long)]
        check: String,
        /// Alpha range "start:stop:step" (stop inclusive within 1e-12) or a single value
        #[arg(long)]
        alphas: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long)]
        interval: Option<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        xs: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambdas: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        b: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        data: Vec<f64>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<f64>,
        /// Partition counts for riemann-diag
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        partitions: Vec<u64>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Generalized Jensen inequality
    Jensen {
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        xs: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambdas: Vec<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Generalized Hermite-Hadamard inequality
    Hh {
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long)]
        interval: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Generalized Cauchy-Schwarz inequality
    Cs {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        b: Vec<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Power-mean chain S_s <= S_t
    Powermean {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        data: Vec<f64>,
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[command(flatten)]
        common: Common,
    },
}

/// Flags that may come from the config file; command line wins.
#[derive(Debug, Clone, Default, Deserialize)]
struct ConfigFile {
    alpha: Option<f64>,
    alphas: Option<String>,
    mode: Option<String>,
    tol: Option<f64>,
    format: Option<String>,
    out: Option<String>,
    expr: Option<String>,
    interval: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::Precondition(format!(
                "unknown format `{other}` (expected json, csv or text)"
            ))),
        }
    }
}

struct Resolved {
    alpha: Option<Alpha>,
    alphas: Option<String>,
    mode: Mode,
    tol: f64,
    format: Format,
    out: Option<PathBuf>,
    expr: Option<String>,
    interval: Option<String>,
}

fn load_config(path: &Option<PathBuf>) -> Result<ConfigFile> {
    match path {
        None => Ok(ConfigFile::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| {
                Error::Precondition(format!("cannot read config {}: {e}", p.display()))
            })?;
            serde_json::from_str(&text)
                .map_err(|e| Error::Precondition(format!("bad config JSON: {e}")))
        }
    }
}

fn resolve(common: &Common) -> Result<Resolved> {
    let cfg = load_config(&common.config)?;
    let alpha = match common.alpha.or(cfg.alpha) {
        Some(v) => Some(Alpha::new(v)?),
        None => None,
    };
    let mode = match common.mode.clone().or(cfg.mode) {
        Some(m) => m.parse()?,
        None => Mode::Real,
    };
    let tol = common.tol.or(cfg.tol).unwrap_or(DEFAULT_TOLERANCE);
    let format = match common.format.clone().or(cfg.format) {
        Some(f) => f.parse()?,
        None => Format::Json,
    };
    let out = common.out.clone().or(cfg.out.map(PathBuf::from));
    Ok(Resolved {
        alpha,
        alphas: cfg.alphas,
        mode,
        tol,
        format,
        out,
        expr: cfg.expr,
        interval: cfg.interval,
    })
}

fn need_alpha(r: &Resolved) -> Result<Alpha> {
    r.alpha
        .ok_or_else(|| Error::Precondition("missing --alpha (flag or config)".into()))
}

fn need_expr(flag: &Option<String>, r: &Resolved) -> Result<Expr> {
    let text = flag
        .clone()
        .or_else(|| r.expr.clone())
        .ok_or_else(|| Error::Precondition("missing --expr (flag or config)".into()))?;
    parse(&text)
}

fn parse_pair(text: &str, what: &str) -> Result<(f64, f64)> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Precondition(format!(
            "{what} must be two comma-separated numbers, got `{text}`"
        )));
    }
    let lo = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::Precondition(format!("bad number in {what}: `{}`", parts[0])))?;
    let hi = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::Precondition(format!("bad number in {what}: `{}`", parts[1])))?;
    Ok((lo, hi))
}

fn parse_list(text: &str, what: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("bad number in {what}: `{p}`")))
        })
        .collect()
}

/// "start:stop:step" inclusive of stop within 1e-12, or a single value.
fn parse_alphas(text: &str) -> Result<Vec<Alpha>> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = |what: &str| Error::Precondition(format!("bad alpha range `{text}`: {what}"));
    match parts.len() {
        1 => Ok(vec![Alpha::new(
            parts[0].trim().parse().map_err(|_| bad("not a number"))?,
        )?]),
        3 => {
            let start: f64 = parts[0].trim().parse().map_err(|_| bad("bad start"))?;
            let stop: f64 = parts[1].trim().parse().map_err(|_| bad("bad stop"))?;
            let step: f64 = parts[2].trim().parse().map_err(|_| bad("bad step"))?;
            if step <= 0.0 || stop < start {
                return Err(bad("need start <= stop and step > 0"));
            }
            let mut out = Vec::new();
            let mut i = 0u32;
            loop {
                let v = start + i as f64 * step;
                if v > stop + 1e-12 {
                    break;
                }
                out.push(Alpha::new(v)?);
                i += 1;
            }
            Ok(out)
        }
        _ => Err(bad("expected start:stop:step or a single value")),
    }
}

/// Append the canonical expression text to the report's description slot so
/// `--expr` is always echoed and re-parseable.
fn echo_expr(mut json: ReportJson, expr: &Expr) -> ReportJson {
    let canon = expr.to_string();
    json.grid = Some(match json.grid {
        Some(g) => format!("{g}; expr: {canon}"),
        None => format!("expr: {canon}"),
    });
    json
}

fn report_exit(satisfied: Option<bool>) -> i32 {
    match satisfied {
        Some(true) => 0,
        _ => 1,
    }
}

fn render_report(json: &ReportJson, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", json.to_pretty()),
        Format::Text => render_text(json),
        Format::Csv => {
            let mut s = String::from("check,alpha,mode,lhs,mid,rhs,margin1,margin2,satisfied\n");
            let opt = |v: Option<f64>| v.map(csv_float).unwrap_or_default();
            let margins = json.margins.clone().unwrap_or_default();
            s.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                json.check,
                csv_float(json.alpha),
                json.mode.clone().unwrap_or_default(),
                opt(json.lhs),
                opt(json.mid),
                opt(json.rhs),
                opt(margins.first().copied()),
                opt(margins.get(1).copied()),
                json.satisfied.map(|b| b.to_string()).unwrap_or_default(),
            ));
            s
        }
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
        Some(p) => std::fs::write(p, content).map_err(|e| {
            Error::Precondition(format!("cannot write {}: {e}", p.display()))
        }),
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own help/version on stdout with status 0
            if e.use_stderr() {
                eprint!("{e}");
                return 2;
            }
            print!("{e}");
            return 0;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Cmd::Eval { expr, at, common } => {
            let r = resolve(&common)?;
            let alpha = need_alpha(&r)?;
            let e = need_expr(&expr, &r)?;
            let (value, base) = match r.mode {
                Mode::Real => (eval_real(&e, at, alpha)?, None),
                Mode::Fractal => {
                    let v = eval_fractal(&e, at, alpha)?;
                    (v.value(), Some(v.base()))
                }
            };
            let json = serde_json::json!({
                "command": "eval",
                "expr": e.to_string(),
                "alpha": alpha.value(),
                "mode": r.mode.to_string(),
                "at": at,
                "value": value,
                "base": base,
            });
            let content = match r.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&json).unwrap()),
                Format::Text => format!("{} at x={} (alpha={}): {}\n", e, at, alpha, value),
                Format::Csv => format!(
                    "alpha,at,value\n{},{},{}\n",
                    csv_float(alpha.value()),
                    csv_float(at),
                    csv_float(value)
                ),
            };
            write_output(&r.out, &content)?;
            Ok(0)
        }
        Cmd::Diff {
            expr,
            order,
            at,
            quotient_h,
            common,
        } => {
            let r = resolve(&common)?;
            let alpha = need_alpha(&r)?;
            let e = need_expr(&expr, &r)?;
            let d = alpha_diff_n(&e, alpha, order)?;
            let value = match at {
                Some(x) => Some(eval_real(&d.derivative, x, alpha)?),
                None => None,
            };
            let quotient = match (at, quotient_h) {
                (Some(x), Some(h)) => Some(numeric_dalpha(&e, x, alpha, h)?),
                _ => None,
            };
            let json = serde_json::json!({
                "command": "diff",
                "expr": e.to_string(),
                "alpha": alpha.value(),
                "order": order,
                "derivative": d.derivative.to_string(),
                "at": at,
                "value": value,
                "difference_quotient": quotient,
            });
            let content = match r.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&json).unwrap()),
                Format::Text => {
                    let mut s = format!("d^({order}a)/dx^({order}a) [{e}] = {}\n", d.derivative);
                    if let Some(v) = value {
                        s.push_str(&format!("value at x={}: {v}\n", at.unwrap()));
                    }
                    if let Some(q) = quotient {
                        s.push_str(&format!("difference quotient: {q}\n"));
                    }
                    s
                }
                Format::Csv => {
                    return Err(Error::Precondition(
                        "csv format is not supported for diff".into(),
                    ))
                }
            };
            write_output(&r.out, &content)?;
            Ok(0)
        }
        Cmd::Integrate {
            expr,
            from,
            to,
            common,
        } => {
            let r = resolve(&common)?;
            let alpha = need_alpha(&r)?;
            let e = need_expr(&expr, &r)?;
            let value = match r.mode {
                Mode::Real => lfi_expr(&e, from, to, alpha)?,
                Mode::Fractal => {
                    let phi = |x: f64| eval_base(&e, x);
                    let base = adaptive_simpson(&phi, from, to, 1e-10, 1_000_000)?;
                    spow(base, alpha.value())
                        / gamma1p_alpha(Rational::from_integer(1), alpha)?
                }
            };
            let json = serde_json::json!({
                "command": "integrate",
                "expr": e.to_string(),
                "alpha": alpha.value(),
                "mode": r.mode.to_string(),
                "from": from,
                "to": to,
                "value": value,
            });
            let content = match r.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&json).unwrap()),
                Format::Text => format!(
                    "integral of {e} over [{from},{to}] (alpha={alpha}, {} mode): {value}\n",
                    r.mode
                ),
                Format::Csv => format!(
                    "alpha,from,to,value\n{},{},{},{}\n",
                    csv_float(alpha.value()),
                    csv_float(from),
                    csv_float(to),
                    csv_float(value)
                ),
            };
            write_output(&r.out, &content)?;
            Ok(0)
        }
        Cmd::Taylor {
            expr,
            x0,
            n,
            interval,
            common,
        } => {
            let r = resolve(&common)?;
            let alpha = need_alpha(&r)?;
            let e = need_expr(&expr, &r)?;
            let iv = match interval.or_else(|| r.interval.clone()) {
                Some(t) => parse_pair(&t, "--interval")?,
                None => (x0, x0 + 1.0),
            };
            let t = taylor_alpha(&e, x0, n, alpha, iv)?;
            let coeffs: Vec<serde_json::Value> = t
                .polynomial
                .terms()
                .iter()
                .map(|(k, c)| serde_json::json!({ "k": k.to_string(), "coeff": c }))
                .collect();
            let json = serde_json::json!({
                "command": "taylor",
                "expr": e.to_string(),
                "alpha": alpha.value(),
                "x0": x0,
                "n": n,
                "interval": [iv.0, iv.1],
                "polynomial": t.polynomial.to_expr().to_string(),
                "coefficients": coeffs,
                "remainder_bound": t.remainder_bound,
            });
            let content = match r.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&json).unwrap()),
                Format::Text => format!(
                    "T_{n}[{e}] about x0={x0} (alpha={alpha}): {}\nremainder bound on [{},{}]: {}\n",
                    t.polynomial.to_expr(),
                    iv.0,
                    iv.1,
                    t.remainder_bound
                ),
                Format::Csv => {
                    return Err(Error::Precondition(
                        "csv format is not supported for taylor".into(),
                    ))
                }
            };
            write_output(&r.out, &content)?;
            Ok(0)
        }
        Cmd::Convexity {
            expr,
            interval,
            method,
            strict,
            pairs,
            lambdas,
            points,
            triple,
            common,
        } => {
            let r = resolve(&common)?;
            let alpha = need_alpha(&r)?;
            let e = need_expr(&expr, &r)?;
            if method == "slope" {
                let t = triple.ok_or_else(|| {
                    Error::Precondition("--method slope needs --triple x1,x2,x3".into())
                })?;
                let parts = parse_list(&t, "--triple")?;
                if parts.len() != 3 {
                    return Err(Error::Precondition("--triple needs three numbers".into()));
                }
                let s = slope_diag(&e, (parts[0], parts[1], parts[2]), alpha)?;
                let json = serde_json::json!({
                    "command": "convexity",
                    "method": "slope",
                    "expr": e.to_string(),
                    "alpha": alpha.value(),
                    "diagnostic": true,
                    "real": { "lhs": s.real_lhs, "rhs": s.real_rhs, "holds": s.real_holds },
                    "fractal": s.fractal.map(|(l, rr, h)| serde_json::json!({
                        "lhs": l, "rhs": rr, "holds": h
                    })),
                });
                let content = match r.format {
                    Format::Json => {
                        format!("{}\n", serde_json::to_string_pretty(&json).unwrap())
                    }
                    Format::Text => format!(
                        "slope diagnostic for {e} (alpha={alpha}):\n  real: {} <= {} -> {}\n  fractal: {}\n",
                        s.real_lhs,
                        s.real_rhs,
                        s.real_holds,
                        match s.fractal {
                            Some((l, rr, h)) => format!("{l} <= {rr} -> {h}"),
                            None => "unavailable (no base image)".to_string(),
                        }
                    ),
                    Format::Csv => {
                        return Err(Error::Precondition(
                            "csv format is not supported for the slope diagnostic".into(),
                        ))
                    }
                };
                write_output(&r.out, &content)?;
                return Ok(if s.real_holds { 0 } else { 1 });
            }
            let iv = match interval.or_else(|| r.interval.clone()) {
                Some(t) => parse_pair(&t, "--interval")?,
                None => return Err(Error::Precondition("missing --interval".into())),
            };
            let report: ConvexityReport = match method.as_str() {
                "chord" => chord_check(
                    &e,
                    iv,
                    alpha,
                    r.mode,
                    ChordGrid {
                        n_pairs: pairs,
                        n_lambda: lambdas,
                    },
                    strict,
                    r.tol,
                )?,
                "grad" => grad_monotone_check(&e, iv, alpha, points)?,
                "support" => support_line_check(&e, iv, alpha, points.min(64))?,
                "second" => second_deriv_check(&e, iv, alpha, points)?,
                other => {
                    return Err(Error::Precondition(format!(
                        "unknown method `{other}` (chord|grad|support|second|slope)"
                    )))
                }
            };
            let json = echo_expr(ReportJson::from(&report), &e);
            let content = render_report(&json, r.format);
            write_output(&r.out, &content)?;
            Ok(match report.verdict {
                Verdict::Convex | Verdict::StrictlyConvex => 0,
                _ => 1,
            })
        }
        Cmd::Verify { what } => {
            let (report, e, common): (InequalityReport, Option<Expr>, Common) = match what {
                VerifyCmd::Jensen {
                    expr,
                    xs,
                    lambdas,
                    common,
                } => {
                    let r = resolve(&common)?;
                    let alpha = need_alpha(&r)?;
                    let e = need_expr(&expr, &r)?;
                    if xs.is_empty() || lambdas.is_empty() {
                        return Err(Error::Precondition(
                            "verify jensen needs --xs and --lambdas".into(),
                        ));
                    }
                    (
                        jensen(&e, &xs, &lambdas, alpha, r.mode, r.tol)?,
                        Some(e),
                        common,
                    )
                }
                VerifyCmd::Hh {
                    expr,
                    interval,
                    common,
                } => {
                    let r = resolve(&common)?;
                    let alpha = need_alpha(&r)?;
                    let e = need_expr(&expr, &r)?;
                    let iv = match interval.or_else(|| r.interval.clone()) {
                        Some(t) => parse_pair(&t, "--interval")?,
                        None => return Err(Error::Precondition("missing --interval".into())),
                    };
                    (
                        hermite_hadamard(&e, iv.0, iv.1, alpha, r.mode, r.tol)?,
                        Some(e),
                        common,
                    )
                }
                VerifyCmd::Cs { a, b, common } => {
                    let r = resolve(&common)?;
                    let alpha = need_alpha(&r)?;
                    if a.is_empty() || b.is_empty() {
                        return Err(Error::Precondition("verify cs needs --a and --b".into()));
                    }
                    (cauchy_schwarz(&a, &b, alpha, r.tol)?, None, common)
                }
                VerifyCmd::Powermean {
                    data,
                    s,
                    t,
                    common,
                } => {
                    let r = resolve(&common)?;
                    let alpha = need_alpha(&r)?;
                    if data.is_empty() {
                        return Err(Error::Precondition("verify powermean needs --data".into()));
                    }
                    (
                        power_mean_compare(&data, s, t, alpha, r.mode, r.tol)?,
                        None,
                        common,
                    )
                }
            };
            let r = resolve(&common)?;
            let mut json = ReportJson::from(&report);
            if let Some(e) = &e {
                json = echo_expr(json, e);
            }
            let content = render_report(&json, r.format);
            write_output(&r.out, &content)?;
            Ok(report_exit(Some(report.satisfied)))
        }
        Cmd::Examples {
            id,
            inputs,
            s,
            t,
            common,
        } => {
            let r = resolve(&common)?;
            let alpha = need_alpha(&r)?;
            let parsed = match inputs {
                None => ExampleInputs::default_for(&id, alpha)?,
                Some(text) => {
                    let vals = parse_list(&text, "--inputs")?;
                    let wrong = |n: usize| {
                        Error::Precondition(format!(
                            "example {id} needs {n} comma-separated inputs"
                        ))
                    };
                    match id.as_str() {
                        "5.1" => match vals[..] {
                            [a, b] => ExampleInputs::E51 { a, b },
                            _ => return Err(wrong(2)),
                        },
                        "5.2" => match vals[..] {
                            [x, y] => ExampleInputs::E52 { x, y },
                            _ => return Err(wrong(2)),
                        },
                        "5.3" => ExampleInputs::E53 {
                            data: vals,
                            s: s.unwrap_or(1.0),
                            t: t.unwrap_or(2.0),
                            mode: r.mode,
                        },
                        "5.4" => match vals[..] {
                            [a, b, c] => ExampleInputs::E54 { a, b, c },
                            _ => return Err(wrong(3)),
                        },
                        "5.5" => match vals[..] {
                            [a, b, c, d] => ExampleInputs::E55 { a, b, c, d },
                            _ => return Err(wrong(4)),
                        },
                        other => {
                            return Err(Error::Precondition(format!(
                                "unknown example id `{other}`"
                            )))
                        }
                    }
                }
            };
            let report = run_example(&parsed, alpha, r.tol)?;
            let json = ReportJson::from(&report);
            let content = render_report(&json, r.format);
            write_output(&r.out, &content)?;
            Ok(report_exit(Some(report.satisfied)))
        }
        Cmd::Sweep {
            check,
            alphas,
            expr,
            interval,
            xs,
            lambdas,
            a,
            b,
            data,
            s,
            t,
            partitions,
            common,
        } => {
            let r = resolve(&common)?;
            let alphas_text = alphas
                .or_else(|| r.alphas.clone())
                .ok_or_else(|| Error::Precondition("missing --alphas".into()))?;
            let grid = parse_alphas(&alphas_text)?;
            let mut csv = String::new();
            if check == "riemann-diag" {
                let e = need_expr(&expr, &r)?;
                let iv = match interval.or_else(|| r.interval.clone()) {
                    Some(t) => parse_pair(&t, "--interval")?,
                    None => return Err(Error::Precondition("missing --interval".into())),
                };
                let ns: Vec<u64> = if partitions.is_empty() {
                    vec![100, 1000, 10000]
                } else {
                    partitions
                };
                csv.push_str("alpha,mode,N,sum,growth_exponent\n");
                for al in &grid {
                    let d = riemann_diag(&e, iv.0, iv.1, *al, &ns)?;
                    for &(n, sum) in &d.sums {
                        csv.push_str(&format!(
                            "{},real,{},{},{}\n",
                            csv_float(al.value()),
                            n,
                            csv_float(sum),
                            csv_float(d.growth_exponent)
                        ));
                    }
                }
                write_output(&r.out, &csv)?;
                return Ok(0);
            }
            csv.push_str("alpha,mode,lhs,mid,rhs,margin1,margin2,satisfied\n");
            let mut all_satisfied = true;
            for al in &grid {
                let report = match check.as_str() {
                    "hh" => {
                        let e = need_expr(&expr, &r)?;
                        let iv = match interval.clone().or_else(|| r.interval.clone()) {
                            Some(t) => parse_pair(&t, "--interval")?,
                            None => {
                                return Err(Error::Precondition("missing --interval".into()))
                            }
                        };
                        hermite_hadamard(&e, iv.0, iv.1, *al, r.mode, r.tol)?
                    }
                    "jensen" => {
                        let e = need_expr(&expr, &r)?;
                        if xs.is_empty() || lambdas.is_empty() {
                            return Err(Error::Precondition(
                                "sweep jensen needs --xs and --lambdas".into(),
                            ));
                        }
                        jensen(&e, &xs, &lambdas, *al, r.mode, r.tol)?
                    }
                    "cs" => {
                        if a.is_empty() || b.is_empty() {
                            return Err(Error::Precondition(
                                "sweep cs needs --a and --b".into(),
                            ));
                        }
                        cauchy_schwarz(&a, &b, *al, r.tol)?
                    }
                    "powermean" => {
                        if data.is_empty() {
                            return Err(Error::Precondition(
                                "sweep powermean needs --data".into(),
                            ));
                        }
                        let (s, t) = (
                            s.ok_or_else(|| Error::Precondition("missing --s".into()))?,
                            t.ok_or_else(|| Error::Precondition("missing --t".into()))?,
                        );
                        power_mean_compare(&data, s, t, *al, r.mode, r.tol)?
                    }
                    other => {
                        return Err(Error::Precondition(format!(
                            "unknown sweep check `{other}` (hh|jensen|cs|powermean|riemann-diag)"
                        )))
                    }
                };
                all_satisfied &= report.satisfied;
                let m1 = report.margins.first().copied();
                let m2 = report.margins.get(1).copied();
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    csv_float(al.value()),
                    report.mode,
                    csv_float(report.lhs),
                    report.mid.map(csv_float).unwrap_or_default(),
                    csv_float(report.rhs),
                    m1.map(csv_float).unwrap_or_default(),
                    m2.map(csv_float).unwrap_or_default(),
                    report.satisfied
                ));
            }
            write_output(&r.out, &csv)?;
            Ok(if all_satisfied { 0 } else { 1 })
        }
    }
}
