//! Serialization of tables and reports.

use std::fs;
use std::io::Write;
use std::path::Path;

use chrono::{SecondsFormat, Utc};
use serde::Serialize;
use switch_thermo::qfi::Method;

use crate::error::CliResult;

pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

/// Wall-clock stamp for JSON records; the only nondeterministic field.
pub fn timestamp() -> String {
    Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true)
}

/// Numeric table with a fixed column schema; every row carries the same
/// evaluation method.
#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub method: Method,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    /// CSV with one header row, 17 significant digits per number and a
    /// trailing `method` column.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push_str(",method\n");
        let method = self.method.to_string();
        for row in &self.rows {
            for v in row {
                out.push_str(&format!("{v:.16e},"));
            }
            out.push_str(&method);
            out.push('\n');
        }
        out
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports contain only finite numbers");
    s.push('\n');
    s
}

/// Writes to `path`, or to standard output when `path` is `None`.
pub fn emit(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// `n` evenly spaced values from `start` to `stop`, both endpoints exact.
pub fn linspace(start: f64, stop: f64, n: usize) -> Vec<f64> {
    let last = (n - 1) as f64;
    (0..n)
        .map(|i| {
            if i + 1 == n {
                stop
            } else {
                start + (stop - start) * (i as f64 / last)
            }
        })
        .collect()
}
