//! Machine-readable report rendering.
//!
//! Every convexity and inequality report serializes to one fixed JSON object
//! with exactly these keys, in this order:
//! {"check","alpha","mode","lhs","mid","rhs","margins","satisfied",
//!  "tolerance","witnesses","grid"} — absent fields are null, never omitted.
//! A convexity verdict maps to satisfied = true/false, with null for an
//! inconclusive run; the verdict word is also part of the grid description.

use serde::Serialize;

use crate::convexity::{ConvexityReport, Verdict, Witness};
use crate::inequalities::InequalityReport;

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub check: String,
    pub alpha: f64,
    pub mode: Option<String>,
    pub lhs: Option<f64>,
    pub mid: Option<f64>,
    pub rhs: Option<f64>,
    pub margins: Option<Vec<f64>>,
    pub satisfied: Option<bool>,
    pub tolerance: Option<f64>,
    pub witnesses: Option<Vec<WitnessJson>>,
    pub grid: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub x1: f64,
    pub lambda: Option<f64>,
    pub x2: f64,
    pub lhs: f64,
    pub rhs: f64,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            x1: w.x1,
            lambda: w.lambda,
            x2: w.x2,
            lhs: w.lhs,
            rhs: w.rhs,
        }
    }
}

impl From<&InequalityReport> for ReportJson {
    fn from(r: &InequalityReport) -> Self {
        ReportJson {
            check: r.check.clone(),
            alpha: r.alpha,
            mode: Some(r.mode.to_string()),
            lhs: Some(r.lhs),
            mid: r.mid,
            rhs: Some(r.rhs),
            margins: Some(r.margins.clone()),
            satisfied: Some(r.satisfied),
            tolerance: Some(r.tolerance),
            witnesses: Some(r.witnesses.iter().map(WitnessJson::from).collect()),
            grid: r.notes.clone(),
        }
    }
}

impl From<&ConvexityReport> for ReportJson {
    fn from(r: &ConvexityReport) -> Self {
        ReportJson {
            check: r.check.clone(),
            alpha: r.alpha,
            mode: Some(r.mode.to_string()),
            lhs: None,
            mid: None,
            rhs: None,
            margins: None,
            satisfied: match r.verdict {
                Verdict::Convex | Verdict::StrictlyConvex => Some(true),
                Verdict::Nonconvex => Some(false),
                Verdict::Inconclusive => None,
            },
            tolerance: Some(r.tolerance),
            witnesses: Some(r.witnesses.iter().map(WitnessJson::from).collect()),
            grid: Some(r.grid.clone()),
        }
    }
}

impl ReportJson {
    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// One CSV cell with 17 significant digits, `.` decimal separator.
pub fn csv_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Text rendering shared by the CLI's --format text.
pub fn render_text(r: &ReportJson) -> String {
    let mut out = String::new();
    out.push_str(&format!("check: {}\n", r.check));
    out.push_str(&format!("alpha: {}\n", r.alpha));
    if let Some(m) = &r.mode {
        out.push_str(&format!("mode: {m}\n"));
    }
    match (r.lhs, r.mid, r.rhs) {
        (Some(l), Some(m), Some(rr)) => {
            out.push_str(&format!("triple: {l} <= {m} <= {rr}\n"));
        }
        (Some(l), None, Some(rr)) => {
            out.push_str(&format!("lhs: {l}\nrhs: {rr}\n"));
        }
        _ => {}
    }
    if let Some(margins) = &r.margins {
        out.push_str(&format!("margins: {margins:?}\n"));
    }
    match r.satisfied {
        Some(true) => out.push_str("satisfied: true\n"),
        Some(false) => out.push_str("satisfied: false\n"),
        None => out.push_str("satisfied: inconclusive\n"),
    }
    if let Some(t) = r.tolerance {
        out.push_str(&format!("tolerance: {t}\n"));
    }
    if let Some(ws) = &r.witnesses {
        if !ws.is_empty() {
            out.push_str(&format!("witnesses ({}):\n", ws.len()));
            for w in ws {
                match w.lambda {
                    Some(l) => out.push_str(&format!(
                        "  x1={} lambda={} x2={}: lhs={} rhs={}\n",
                        w.x1, l, w.x2, w.lhs, w.rhs
                    )),
                    None => out.push_str(&format!(
                        "  x1={} x2={}: lhs={} rhs={}\n",
                        w.x1, w.x2, w.lhs, w.rhs
                    )),
                }
            }
        }
    }
    if let Some(g) = &r.grid {
        out.push_str(&format!("grid: {g}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keys_are_fixed_and_nulls_present() {
        let r = ReportJson {
            check: "jensen".into(),
            alpha: 0.5,
            mode: Some("real".into()),
            lhs: Some(1.0),
            mid: None,
            rhs: Some(2.0),
            margins: Some(vec![1.0]),
            satisfied: Some(true),
            tolerance: Some(1e-9),
            witnesses: Some(vec![]),
            grid: None,
        };
        let text = r.to_pretty();
        // serialization order is the schema order
        let keys = [
            "\"check\"",
            "\"alpha\"",
            "\"mode\"",
            "\"lhs\"",
            "\"mid\"",
            "\"rhs\"",
            "\"margins\"",
            "\"satisfied\"",
            "\"tolerance\"",
            "\"witnesses\"",
            "\"grid\"",
        ];
        let positions: Vec<usize> = keys
            .iter()
            .map(|k| text.find(k).unwrap_or_else(|| panic!("missing key {k}")))
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(v["mid"].is_null());
        assert!(v["grid"].is_null());
    }

    #[test]
    fn csv_floats_have_17_significant_digits() {
        assert_eq!(csv_float(0.25), "2.5000000000000000e-1");
        assert_eq!(csv_float(1.0), "1.0000000000000000e0");
    }
}
