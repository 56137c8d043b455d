//! Tabular reports in CSV or JSON.
//!
//! Floats are written with 17 significant digits so that every value
//! round-trips exactly. CSV output may start with a `# generated …` comment
//! line; JSON output carries the same information in a `generated` key. Both
//! are omitted in deterministic mode.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(invalid(format!("unknown format '{other}' (expected csv or json)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(u64),
    Float(f64),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => format_float(*x),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(i) => Value::from(*i),
            // non-finite values have no JSON number form
            Cell::Float(x) if x.is_finite() => Value::from(*x),
            Cell::Float(x) => Value::String(format_float(*x)),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as u64)
    }
}

impl From<u64> for Cell {
    fn from(i: u64) -> Self {
        Cell::Int(i)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

/// `{:.16e}`: 17 significant digits, lossless for `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Column names of the per-sample bound report.
pub const BOUND_COLUMNS: [&str; 13] = [
    "class",
    "m",
    "n",
    "re_lambda",
    "im_lambda",
    "value",
    "bound",
    "slack",
    "residual",
    "seed",
    "sample_index",
    "sum_slack",
    "flag",
];

pub const SCAN_COLUMNS: [&str; 6] = ["predicate", "param", "n", "sample_index", "slack", "violated"];

pub const HAYMAN_COLUMNS: [&str; 3] = ["j", "r_j", "value"];

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width does not match header");
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Writes the table; `generated` is a header comment (e.g. a timestamp), if any.
    pub fn write<W: Write>(&self, out: W, format: Format, generated: Option<&str>) -> Result<()> {
        match format {
            Format::Csv => self.write_csv(out, generated),
            Format::Json => self.write_json(out, generated),
        }
    }

    fn write_csv<W: Write>(&self, mut out: W, generated: Option<&str>) -> Result<()> {
        if let Some(g) = generated {
            writeln!(out, "# generated {g}").map_err(io)?;
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns).map_err(csv_err)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).map_err(csv_err)?;
        }
        w.flush().map_err(io)
    }

    fn write_json<W: Write>(&self, mut out: W, generated: Option<&str>) -> Result<()> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self.columns.iter().cloned().zip(row.iter().map(Cell::json)).collect();
                Value::Object(obj)
            })
            .collect();
        let mut doc = Map::new();
        if let Some(g) = generated {
            doc.insert("generated".into(), Value::String(g.into()));
        }
        doc.insert("rows".into(), Value::Array(rows));
        serde_json::to_writer_pretty(&mut out, &Value::Object(doc)).map_err(|e| Error::Domain(e.to_string()))?;
        writeln!(out).map_err(io)
    }
}

/// Seconds since the Unix epoch, for report headers.
pub fn timestamp() -> String {
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    format!("unix={secs}")
}

fn io(e: std::io::Error) -> Error {
    Error::Domain(format!("write failed: {e}"))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Domain(format!("write failed: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(HAYMAN_COLUMNS);
        t.push(vec![1usize.into(), 0.5.into(), 0.125.into()]);
        t.push(vec![2usize.into(), 0.75.into(), (1.0f64 / 3.0).into()]);
        t
    }

    #[test]
    fn csv_round_trips_floats() {
        let mut buf = Vec::new();
        sample().write(&mut buf, Format::Csv, None).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("j,r_j,value"));
        let second = lines.nth(1).unwrap();
        let third: f64 = second.split(',').nth(2).unwrap().parse().unwrap();
        assert_eq!(third, 1.0 / 3.0);
    }

    #[test]
    fn header_comment_only_when_requested() {
        let mut buf = Vec::new();
        sample().write(&mut buf, Format::Csv, Some("unix=1")).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("# generated unix=1\n"));
    }

    #[test]
    fn json_rows() {
        let mut buf = Vec::new();
        sample().write(&mut buf, Format::Json, None).unwrap();
        let v: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["rows"][1]["value"].as_f64().unwrap(), 1.0 / 3.0);
        assert!(v.get("generated").is_none());
    }

    #[test]
    fn format_parsing() {
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert!("xml".parse::<Format>().is_err());
        assert_eq!(format_float(0.1), "1.0000000000000001e-1");
    }
}
