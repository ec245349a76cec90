use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use super::{Record, TableId};
use crate::error::{Error, Result, RowIssue};

/// Writes a header row and one row per entry. Quantities carry unit
/// suffixes and parse back to the identical `f64`.
pub fn write_csv<T: Record, W: Write>(entries: &[T], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(T::SCHEMA)?;
    for entry in entries {
        writer.write_record(entry.to_csv_row())?;
    }
    writer.flush()?;
    Ok(())
}

pub fn to_csv_string<T: Record>(entries: &[T]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(entries, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv writer emits utf-8"))
}

/// Parses CSV text against `table`'s schema. `origin` names the source in
/// error messages. Every malformed row is reported, not just the first.
pub fn parse_csv<T: Record, R: Read>(input: R, table: TableId, origin: &str) -> Result<Vec<T>> {
    if T::SCHEMA != table.schema() {
        return Err(Error::CsvSchema {
            path: origin.to_string(),
            reason: format!("table {table} does not hold this record type"),
        });
    }
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(input);

    let header = reader.headers()?.clone();
    let header: Vec<&str> = header.iter().collect();
    if header != T::SCHEMA {
        return Err(Error::CsvSchema {
            path: origin.to_string(),
            reason: format!(
                "header {:?} does not match the {table} schema {:?}",
                header.join(","),
                T::SCHEMA.join(",")
            ),
        });
    }

    let mut entries = Vec::new();
    let mut issues = Vec::new();
    for record in reader.records() {
        let record = match record {
            Ok(r) => r,
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line());
                issues.push(RowIssue {
                    line,
                    reason: e.to_string(),
                });
                continue;
            }
        };
        let line = record.position().map_or(0, |p| p.line());
        if record.len() > T::SCHEMA.len() {
            issues.push(RowIssue {
                line,
                reason: format!("{} columns, schema has {}", record.len(), T::SCHEMA.len()),
            });
            continue;
        }
        let mut cells: Vec<&str> = record.iter().collect();
        cells.resize(T::SCHEMA.len(), "");
        match T::from_csv_row(&cells, table) {
            Ok(entry) => entries.push(entry),
            Err(reason) => issues.push(RowIssue { line, reason }),
        }
    }
    if !issues.is_empty() {
        return Err(Error::CsvRows {
            path: origin.to_string(),
            rows: issues,
        });
    }
    Ok(entries)
}

/// Reads a user-supplied table extension from disk.
pub fn ingest_csv<T: Record>(path: impl AsRef<Path>, table: TableId) -> Result<Vec<T>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_csv(file, table, &path.display().to_string())
}
