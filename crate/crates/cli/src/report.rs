//! Deterministic rendering of sweep reports.
//!
//! Both formats are fully canonical: identical configuration and code
//! produce byte-identical output. The wall-clock duration is deliberately
//! kept out of the rendered bytes (the driver reports it on stderr), so
//! consecutive runs can be diffed directly and JSON output round-trips.

use crate::sweep::{CheckKind, Format, RunReport, SweepConfig};
use partid_core::identity::CheckResult;
use serde::{Deserialize, Serialize};

/// Wire form of the report. Field names are stable:
///
/// ```json
/// {
///   "config": { ... },
///   "results": [
///     { "check": "...", "params": {"n": 1}, "status": "pass",
///       "lhs": "...", "rhs": "...", "witness": null }
///   ],
///   "totals": { "pass": 0, "fail": 0 }
/// }
/// ```
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JsonReport {
    pub config: JsonConfig,
    pub results: Vec<CheckResult>,
    pub totals: Totals,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JsonConfig {
    pub max_n: u32,
    pub s_range: [u32; 2],
    pub checks: Vec<String>,
    pub series_order: usize,
    pub oracle_cap: u32,
    pub format: String,
    pub jobs: String,
    pub negative_control: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
}

impl From<&SweepConfig> for JsonConfig {
    fn from(cfg: &SweepConfig) -> Self {
        JsonConfig {
            max_n: cfg.max_n,
            s_range: [cfg.s_range.0, cfg.s_range.1],
            checks: cfg.checks.iter().map(|c| c.name().to_string()).collect(),
            series_order: cfg.series_order,
            oracle_cap: cfg.oracle_cap,
            format: cfg.format.name().to_string(),
            jobs: cfg.jobs.to_string(),
            negative_control: cfg.negative_control,
        }
    }
}

impl From<&RunReport> for JsonReport {
    fn from(report: &RunReport) -> Self {
        JsonReport {
            config: JsonConfig::from(&report.config),
            results: report.results.clone(),
            totals: Totals {
                pass: report.pass,
                fail: report.fail,
            },
        }
    }
}

/// Render in the requested format. The returned bytes are the complete
/// canonical report.
pub fn render_report(report: &RunReport, format: Format) -> String {
    match format {
        Format::Text => render_text(report),
        Format::Json => render_json(report),
    }
}

pub fn render_json(report: &RunReport) -> String {
    let mut s = serde_json::to_string_pretty(&JsonReport::from(report))
        .expect("report serialization cannot fail");
    s.push('\n');
    s
}

/// Re-render a parsed wire report; parsing [`render_json`] output and
/// feeding it back through here reproduces the bytes exactly.
pub fn render_json_value(report: &JsonReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialization cannot fail");
    s.push('\n');
    s
}

pub fn render_text(report: &RunReport) -> String {
    let cfg = &report.config;
    let mut out = String::new();
    out.push_str(&format!(
        "config: max_n={} s={}..{} checks={} series_order={} oracle_cap={} format={} jobs={} negative_control={}\n",
        cfg.max_n,
        cfg.s_range.0,
        cfg.s_range.1,
        cfg.checks
            .iter()
            .map(CheckKind::name)
            .collect::<Vec<_>>()
            .join(","),
        cfg.series_order,
        cfg.oracle_cap,
        cfg.format.name(),
        cfg.jobs,
        cfg.negative_control,
    ));

    let header = ["check", "params", "status", "lhs", "rhs", "witness"];
    let rows: Vec<[String; 6]> = report.results.iter().map(text_row).collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }

    push_row(&mut out, &header.map(String::from), &widths);
    for row in &rows {
        push_row(&mut out, row, &widths);
    }

    out.push_str(&format!("totals: pass={} fail={}\n", report.pass, report.fail));
    out
}

fn text_row(result: &CheckResult) -> [String; 6] {
    let params = result
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    [
        result.check.clone(),
        params,
        result.status.to_string(),
        result.lhs.clone(),
        result.rhs.clone(),
        result.witness.clone().unwrap_or_else(|| "-".to_string()),
    ]
}

fn push_row(out: &mut String, cells: &[String; 6], widths: &[usize]) {
    for (i, cell) in cells.iter().enumerate() {
        if i > 0 {
            out.push_str("  ");
        }
        if i + 1 == cells.len() {
            // no padding after the last column
            out.push_str(cell);
        } else {
            out.push_str(&format!("{:<w$}", cell, w = widths[i]));
        }
    }
    out.push('\n');
}
