//! PFA CSV files.
//!
//! Header `f1,…,fm`, one point per row, `#` comment lines anywhere. Values are
//! written in shortest round-trip form, so a write/read cycle is bit-exact.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::geometry::{Pfa, Point};
use crate::scalar::Scalar;

/// Parses PFA CSV text. A leading non-numeric row is taken as the header.
pub fn parse_pfa<T: Scalar>(text: &str) -> Result<Pfa<T>> {
    let mut width: Option<usize> = None;
    let mut header_seen = false;
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if !header_seen && points.is_empty() && fields.iter().all(|f| f.parse::<f64>().is_err()) {
            header_seen = true;
            width = Some(fields.len());
            continue;
        }
        let expected = *width.get_or_insert(fields.len());
        if fields.len() != expected {
            return Err(Error::Parse {
                line: line_no,
                column: None,
                message: format!("expected {expected} fields, found {}", fields.len()),
            });
        }
        let mut coords = Vec::with_capacity(expected);
        for (col, f) in fields.iter().enumerate() {
            let v: f64 = f.parse().map_err(|_| Error::Parse {
                line: line_no,
                column: Some(col + 1),
                message: format!("not a number: {f:?}"),
            })?;
            if !v.is_finite() {
                return Err(Error::Parse {
                    line: line_no,
                    column: Some(col + 1),
                    message: format!("non-finite value {f:?}"),
                });
            }
            coords.push(T::lit(v));
        }
        points.push(Point::new(coords).map_err(|e| Error::Parse {
            line: line_no,
            column: None,
            message: e.to_string(),
        })?);
    }
    if points.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            column: None,
            message: "no data rows".into(),
        });
    }
    Pfa::new(points)
}

pub fn read_pfa<T: Scalar>(path: &Path) -> Result<Pfa<T>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_pfa(&text)
}

/// Renders a PFA with optional `# key: value` metadata lines before the header.
pub fn format_pfa<T: Scalar>(pfa: &Pfa<T>, metadata: &[(String, String)]) -> String {
    let mut out = String::new();
    for (k, v) in metadata {
        let _ = writeln!(out, "# {k}: {v}");
    }
    let header: Vec<String> = (1..=pfa.m()).map(|i| format!("f{i}")).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for p in pfa.iter() {
        let row: Vec<String> = p
            .coords()
            .iter()
            .map(|c| format!("{}", c.as_f64()))
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn write_pfa<T: Scalar>(
    pfa: &Pfa<T>,
    path: &Path,
    metadata: &[(String, String)],
) -> Result<()> {
    fs::write(path, format_pfa(pfa, metadata)).map_err(|e| Error::io(path, e))
}
