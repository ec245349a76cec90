//! Row emitters shared by sweeps, reproduced tables and ISI reports.
//!
//! CSV and human output print floating-point cells with 10 significant
//! digits; JSON carries the full `f64` so values equal the library's.

use std::fmt;
use std::io::Write;

use serde::Serialize;

use crate::error::Result;
use crate::units::format_significant;

pub const SIGNIFICANT_DIGITS: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Number(f64),
    Integer(i64),
    Text(String),
    Empty,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Number(x) => f.write_str(&format_significant(*x, SIGNIFICANT_DIGITS)),
            Cell::Integer(i) => write!(f, "{i}"),
            Cell::Text(s) => f.write_str(s),
            Cell::Empty => Ok(()),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Number(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Number)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

/// A row that can be laid out as named columns. Every row of one table
/// must report the same column names in the same order.
pub trait Tabular: Serialize {
    fn columns(&self) -> Vec<(&'static str, Cell)>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Human,
    Json,
    Csv,
}

pub fn write_csv_rows<R: Tabular, W: Write>(rows: &[R], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    if let Some(first) = rows.first() {
        writer.write_record(first.columns().iter().map(|(name, _)| *name))?;
    }
    for row in rows {
        writer.write_record(row.columns().iter().map(|(_, cell)| cell.to_string()))?;
    }
    writer.flush()?;
    Ok(())
}

pub fn write_json_rows<R: Serialize, W: Write>(rows: &[R], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Space-aligned columns for terminals.
pub fn render_human<R: Tabular>(rows: &[R]) -> String {
    let Some(first) = rows.first() else {
        return String::from("(no rows)\n");
    };
    let header: Vec<String> = first.columns().iter().map(|(n, _)| n.to_string()).collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.columns().iter().map(|(_, c)| c.to_string()).collect())
        .collect();
    render_aligned(&header, &body)
}

/// Left-aligns `header` and `body` cells into columns two spaces apart.
pub fn render_aligned(header: &[String], body: &[Vec<String>]) -> String {
    let columns = body
        .iter()
        .map(Vec::len)
        .chain([header.len()])
        .max()
        .unwrap_or(0);
    let mut widths = vec![0; columns];
    for line in std::iter::once(header).chain(body.iter().map(Vec::as_slice)) {
        for (w, cell) in widths.iter_mut().zip(line) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut text = String::new();
    let lines = (!header.is_empty()).then_some(header).into_iter();
    for line in lines.chain(body.iter().map(Vec::as_slice)) {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        text.push_str(cells.join("  ").trim_end());
        text.push('\n');
    }
    text
}

pub fn write_rows<R: Tabular, W: Write>(
    rows: &[R],
    format: OutputFormat,
    mut out: W,
) -> Result<()> {
    match format {
        OutputFormat::Json => write_json_rows(rows, out),
        OutputFormat::Csv => write_csv_rows(rows, out),
        OutputFormat::Human => {
            out.write_all(render_human(rows).as_bytes())?;
            Ok(())
        }
    }
}
