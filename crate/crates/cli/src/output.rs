use std::fmt::Write;

use clap::ValueEnum;
use mushy_stefan::asymptotics::{RateReport, SweepOutcome};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub enum Payload {
    Object(Value),
    Equivalence(Value),
    Sweep { ladder: Vec<f64>, outcome: Box<SweepOutcome>, rates: Option<RateReport> },
}

pub const SWEEP_COLUMNS: [&str; 9] = ["h0", "xi", "mu", "xi_gap", "mu_gap", "theta1_gap", "theta2_gap", "s_gap", "r_gap"];

/// 17 significant digits.
fn num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Number(n) => n.as_f64().map(num).unwrap_or_else(|| n.to_string()),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Flattens nested objects into `parent.child` columns.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, out);
            }
        }
        other => out.push((prefix.to_string(), cell(other))),
    }
}

fn csv_rows(header: &[String], rows: &[Vec<String>]) -> String {
    let mut s = header.join(",");
    s.push('\n');
    for row in rows {
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

impl Payload {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).unwrap();
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Payload::Object(v) | Payload::Equivalence(v) => v.clone(),
            Payload::Sweep { outcome, rates, .. } => json!({
                "limit": { "xi": outcome.limit.xi, "mu": outcome.limit.mu },
                "records": outcome.records,
                "rejected": outcome.rejected,
                "rates": rates,
            }),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Payload::Object(v) => {
                let mut cells = Vec::new();
                flatten("", v, &mut cells);
                let (h, r): (Vec<String>, Vec<String>) = cells.into_iter().unzip();
                csv_rows(&h, &[r])
            }
            Payload::Equivalence(v) => {
                // one row per direction; columns are the union of both rows
                let rows: Vec<Vec<(String, String)>> = ["forward", "backward"]
                    .iter()
                    .map(|dir| {
                        let mut cells = vec![("direction".to_string(), dir.to_string())];
                        flatten("", &v[*dir], &mut cells);
                        cells
                    })
                    .collect();
                let mut header: Vec<String> = Vec::new();
                for (k, _) in rows.iter().flatten() {
                    if !header.contains(k) {
                        header.push(k.clone());
                    }
                }
                let table: Vec<Vec<String>> = rows
                    .iter()
                    .map(|row| {
                        header
                            .iter()
                            .map(|h| row.iter().find(|(k, _)| k == h).map(|(_, c)| c.clone()).unwrap_or_default())
                            .collect()
                    })
                    .collect();
                csv_rows(&header, &table)
            }
            Payload::Sweep { ladder, outcome, .. } => {
                let mut s = SWEEP_COLUMNS.join(",");
                s.push('\n');
                for &h0 in ladder {
                    match outcome.records.iter().find(|r| r.h0 == h0) {
                        Some(r) => {
                            let vals =
                                [r.h0, r.xi, r.mu, r.xi_gap, r.mu_gap, r.theta1_gap, r.theta2_gap, r.s_gap, r.r_gap];
                            let line: Vec<String> = vals.iter().map(|&v| num(v)).collect();
                            s.push_str(&line.join(","));
                        }
                        // no solution at this entry
                        None => {
                            let _ = write!(s, "{}{}", num(h0), ",NaN".repeat(SWEEP_COLUMNS.len() - 1));
                        }
                    }
                    s.push('\n');
                }
                s
            }
        }
    }
}
