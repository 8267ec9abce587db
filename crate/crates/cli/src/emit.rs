//! Byte-deterministic table emission.
//!
//! A table is an ordered list of rows; every row is the same ordered list of
//! (column, value) pairs. CSV preserves the given column order, uses a header
//! row and LF line endings, renders null as the empty field, and quotes a cell
//! only when it contains a comma, quote, or line break. JSON emits an array of
//! objects with keys sorted lexicographically (serde_json maps are
//! BTree-backed). Identical inputs produce identical bytes.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One output row: column/value pairs in presentation order.
pub type Row = Vec<(&'static str, Value)>;

fn csv_cell(value: &Value) -> String {
    let raw = match value {
        Value::Null => return String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    // Minimal RFC 4180 quoting: only cells that would break the row shape
    // (the error column can carry commas) get wrapped, so numeric tables
    // keep byte-identical output.
    if raw.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw
    }
}

fn render_csv(rows: &[Row]) -> String {
    let mut out = String::new();
    if let Some(first) = rows.first() {
        let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in rows {
            debug_assert!(row.iter().map(|(k, _)| *k).eq(header.iter().copied()));
            let cells: Vec<String> = row.iter().map(|(_, v)| csv_cell(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
    }
    out
}

fn render_json(rows: &[Row]) -> String {
    let array: Vec<Value> = rows
        .iter()
        .map(|row| {
            let mut map = Map::new();
            for (k, v) in row {
                map.insert((*k).to_string(), v.clone());
            }
            Value::Object(map)
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&Value::Array(array)).expect("serializable");
    s.push('\n');
    s
}

pub fn render(rows: &[Row], format: Format) -> String {
    match format {
        Format::Csv => render_csv(rows),
        Format::Json => render_json(rows),
    }
}

/// Write the rendered table to the chosen sink (stdout when `out` is None).
pub fn write_table(rows: &[Row], format: Format, out: &Option<PathBuf>) -> io::Result<()> {
    let rendered = render(rows, format);
    match out {
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(rendered.as_bytes())?;
            lock.flush()
        }
        Some(path) => {
            let mut writer = BufWriter::new(File::create(path)?);
            writer.write_all(rendered.as_bytes())?;
            writer.flush()
        }
    }
}
