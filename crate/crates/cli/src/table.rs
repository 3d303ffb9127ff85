//! Deterministic table emission.
//!
//! Floats are written as `{:.16e}` (17 significant digits, no locale), with
//! the tokens `nan`, `inf` and `-inf` for non-finite values in both formats.
//! JSON output is an array of objects whose keys follow the column order.

use std::io::Write;

use crate::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Bool(bool),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(i64::from(v))
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

pub fn format_float(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        format!("{v:.16e}")
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format_float(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Num(v) if v.is_finite() => format_float(*v),
            Cell::Num(v) => serde_json::to_string(&format_float(*v)).expect("string serializes"),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => serde_json::to_string(s).expect("string serializes"),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width must match the header"
        );
        self.rows.push(row);
    }
}

pub fn emit_table<W: Write>(t: &Table, format: Format, out: W) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            w.write_record(&t.columns)?;
            for row in &t.rows {
                w.write_record(row.iter().map(Cell::csv))?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            out.write_all(b"[")?;
            for (i, row) in t.rows.iter().enumerate() {
                out.write_all(if i == 0 { b"\n  {" } else { b",\n  {" })?;
                for (j, (c, v)) in t.columns.iter().zip(row).enumerate() {
                    if j > 0 {
                        out.write_all(b", ")?;
                    }
                    write!(
                        out,
                        "{}: {}",
                        serde_json::to_string(c).expect("key serializes"),
                        v.json()
                    )?;
                }
                out.write_all(b"}")?;
            }
            out.write_all(if t.rows.is_empty() { b"]\n" } else { b"\n]\n" })?;
            out.flush()
        }
    }
}
