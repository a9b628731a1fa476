//! Report emission: JSON as-is, or a flattened `key,value` CSV.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

/// Renders a serializable report in the requested format, newline-terminated.
pub fn render_report<T: serde::Serialize>(report: &T, format: ReportFormat) -> String {
    let value = serde_json::to_value(report).expect("reports serialize infallibly");
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string(&value).expect("value serialization");
            s.push('\n');
            s
        }
        ReportFormat::Csv => {
            let mut rows = Vec::new();
            flatten("", &value, &mut rows);
            let mut s = String::new();
            for (k, v) in rows {
                s.push_str(&k);
                s.push(',');
                s.push_str(&v);
                s.push('\n');
            }
            s
        }
    }
}

/// Flattens nested objects with dotted keys; numeric arrays become one
/// space-joined cell, arrays of arrays one row per element.
fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    let key = |name: &str| {
        if prefix.is_empty() {
            name.to_string()
        } else {
            format!("{prefix}.{name}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, rows);
            }
        }
        Value::Array(items) if items.iter().all(|v| v.is_number()) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            rows.push((prefix.to_string(), joined.join(" ")));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), v, rows);
            }
        }
        _ => rows.push((prefix.to_string(), scalar(value))),
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::Number(n) => {
            // Shortest round-trip decimals, matching the JSON emitter.
            if let Some(f) = n.as_f64() {
                let mut s = serde_json::to_string(&f).expect("float");
                if let Some(stripped) = s.strip_suffix(".0") {
                    if n.is_i64() || n.is_u64() {
                        s = stripped.to_string();
                    }
                }
                s
            } else {
                n.to_string()
            }
        }
        Value::Bool(b) => b.to_string(),
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => serde_json::to_string(other).expect("scalar"),
    }
}

/// Writes to `--out` when given, otherwise to stdout.
pub fn emit(text: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())
        }
    }
}
