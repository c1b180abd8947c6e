//! Report serialization: 12 significant digits in JSON, 9 in CSV.

use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::entropy::EntropyReport;
use crate::error::Result;

pub const JSON_DIGITS: usize = 12;
pub const CSV_DIGITS: usize = 9;

pub const REPORT_COLUMNS: [&str; 7] =
    ["offset", "route", "field_term", "momentum_bulk", "boundary_term", "total", "error_estimate"];

/// `x` rounded to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().expect("formatted float parses")
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n.as_f64().map(|x| round_sig(x, JSON_DIGITS)).and_then(serde_json::Number::from_f64) {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut v = serde_json::to_value(value)?;
    round_value(&mut v);
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    std::fs::write(path, to_json_string(value)?)?;
    Ok(())
}

pub fn csv_number(x: f64) -> String {
    round_sig(x, CSV_DIGITS).to_string()
}

fn csv_opt(x: Option<f64>) -> String {
    x.map(csv_number).unwrap_or_default()
}

pub fn report_row(r: &EntropyReport) -> Vec<String> {
    vec![
        csv_number(r.offset),
        r.route.as_str().to_string(),
        csv_opt(r.field_term),
        csv_opt(r.momentum_bulk),
        csv_opt(r.boundary_term),
        csv_number(r.total),
        csv_number(r.error_estimate),
    ]
}

/// RFC 4180 table with a header row.
pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_path(path)?;
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}
