//! Table cells and flat key/value reports, written as CSV or JSON.

use clap::ValueEnum;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// One report value. Analyses that were not requested stay `Empty`; ones
/// that could not run say why instead of printing a zero.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum Cell {
    #[default]
    Empty,
    Skipped(String),
    NotApplicable,
    Bool(bool),
    Int(u64),
    Num(f64),
    Text(String),
}

impl Cell {
    pub fn int(v: usize) -> Self {
        Cell::Int(v as u64)
    }

    pub fn skip(reason: impl Into<String>) -> Self {
        Cell::Skipped(reason.into())
    }

    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            Cell::Int(v) => Some(v as f64),
            Cell::Num(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match *self {
            Cell::Bool(b) => Some(b),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == Cell::Empty
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cell::Empty => Ok(()),
            Cell::Skipped(r) => write!(f, "skip:{r}"),
            Cell::NotApplicable => f.write_str("n/a"),
            Cell::Bool(b) => write!(f, "{b}"),
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Num(v) if *v != 0.0 && (v.abs() >= 1e15 || v.abs() < 1e-4) => write!(f, "{v:e}"),
            Cell::Num(v) => write!(f, "{v}"),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Empty => s.serialize_none(),
            Cell::Bool(b) => s.serialize_bool(*b),
            Cell::Int(v) => s.serialize_u64(*v),
            Cell::Num(v) if v.is_finite() => s.serialize_f64(*v),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// Ordered key/value report of a single command.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(pub Vec<(&'static str, Cell)>);

impl Record {
    pub fn push(&mut self, key: &'static str, value: Cell) -> &mut Self {
        self.0.push((key, value));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Cell> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => to_json(self),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let csv_err = |e: csv::Error| CliError::BadInput(format!("csv: {e}"));
                w.write_record(self.0.iter().map(|(k, _)| *k))
                    .map_err(csv_err)?;
                w.write_record(self.0.iter().map(|(_, v)| v.to_string()))
                    .map_err(csv_err)?;
                finish_csv(w)
            }
        }
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> CliResult<String> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::BadInput(format!("json: {e}")))?;
    text.push('\n');
    Ok(text)
}

pub fn finish_csv(w: csv::Writer<Vec<u8>>) -> CliResult<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::BadInput(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::BadInput(format!("csv: {e}")))
}

/// Rows of a serializable struct as CSV with a header line.
pub fn rows_to_csv<T: Serialize>(rows: &[T]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)
            .map_err(|e| CliError::BadInput(format!("csv: {e}")))?;
    }
    finish_csv(w)
}
