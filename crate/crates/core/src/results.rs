//! Results CSV: one row per (instance, indicator), preceded by a `#` metadata block.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::harness::{Experiment, GradeRow, GradeTable};
use crate::indicators::{IndicatorId, Orientation};
use crate::scenarios::{PathologyCase, Scenario};

pub const COLUMNS: [&str; 13] = [
    "experiment",
    "problem",
    "m",
    "cardinality",
    "scenario",
    "level",
    "seed",
    "indicator",
    "value",
    "orientation",
    "rank",
    "grade",
    "error",
];

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// Renders the table. `metadata` pairs become `# key: value` lines.
pub fn format_results(table: &GradeTable, metadata: &[(String, String)]) -> Result<String> {
    let mut out = String::new();
    for (k, v) in metadata {
        out.push_str(&format!("# {k}: {v}\n"));
    }
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::InvalidParameter(e.to_string());
    w.write_record(COLUMNS).map_err(csv_err)?;
    for r in &table.rows {
        w.write_record([
            table.experiment.label().to_string(),
            r.problem.clone(),
            r.m.to_string(),
            r.cardinality.to_string(),
            r.scenario.kind().to_string(),
            r.scenario.level(),
            r.seed.to_string(),
            r.indicator.name().to_string(),
            opt(r.value),
            r.orientation.label().to_string(),
            opt(r.rank),
            opt(r.grade),
            r.error.clone().unwrap_or_default(),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    out.push_str(std::str::from_utf8(&bytes).expect("csv writes utf-8"));
    Ok(out)
}

pub fn write_results(table: &GradeTable, path: &Path, metadata: &[(String, String)]) -> Result<()> {
    let text = format_results(table, metadata)?;
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

fn parse_scenario(kind: &str, level: &str) -> Option<Scenario> {
    match kind {
        "coverage" => level.parse().ok().map(Scenario::Coverage),
        "uniformity" => level.parse().ok().map(Scenario::Uniformity),
        "pathology" => {
            let n: u8 = level.strip_prefix("case")?.parse().ok()?;
            PathologyCase::from_number(n).ok().map(Scenario::Pathology)
        }
        "control" => Some(Scenario::Control),
        _ => None,
    }
}

/// Parses a results file back into a grade table.
pub fn parse_results(text: &str) -> Result<GradeTable> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| Error::Parse {
            line: 1,
            column: None,
            message: e.to_string(),
        })?
        .clone();
    if headers.len() < 12 || headers.iter().zip(COLUMNS).any(|(h, c)| h != c) {
        return Err(Error::Parse {
            line: 1,
            column: None,
            message: "unexpected results header".into(),
        });
    }
    let mut experiment = None;
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            column: None,
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let bad = |column: usize, what: &str| Error::Parse {
            line,
            column: Some(column + 1),
            message: format!("invalid {what}"),
        };
        let field = |i: usize| record.get(i).unwrap_or("");
        let num = |i: usize| -> Result<Option<f64>> {
            let s = field(i);
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse().map(Some).map_err(|_| bad(i, COLUMNS[i]))
            }
        };
        let exp = Experiment::parse(field(0)).ok_or_else(|| bad(0, "experiment"))?;
        if *experiment.get_or_insert(exp) != exp {
            return Err(bad(0, "experiment (mixed)"));
        }
        let indicator = IndicatorId::parse(field(7)).ok_or_else(|| bad(7, "indicator"))?;
        let error = field(12);
        rows.push(GradeRow {
            problem: field(1).to_string(),
            m: field(2).parse().map_err(|_| bad(2, "m"))?,
            cardinality: field(3).parse().map_err(|_| bad(3, "cardinality"))?,
            scenario: parse_scenario(field(4), field(5)).ok_or_else(|| bad(5, "level"))?,
            seed: field(6).parse().map_err(|_| bad(6, "seed"))?,
            indicator,
            orientation: Orientation::parse(field(9)).ok_or_else(|| bad(9, "orientation"))?,
            value: num(8)?,
            rank: num(10)?,
            grade: num(11)?,
            error: (!error.is_empty()).then(|| error.to_string()),
        });
    }
    let experiment = experiment.ok_or(Error::EmptyTable)?;
    Ok(GradeTable { experiment, rows })
}

pub fn read_results(path: &Path) -> Result<GradeTable> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_results(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> GradeTable {
        let row = |scenario, value: Option<f64>, error: Option<&str>| GradeRow {
            problem: "linear".into(),
            m: 3,
            cardinality: 105,
            seed: 42,
            scenario,
            indicator: IndicatorId::Spd,
            orientation: Orientation::Maximize,
            value,
            error: error.map(String::from),
            rank: value.map(|_| 1.0),
            grade: value.map(|_| 10.0),
        };
        GradeTable {
            experiment: Experiment::Pathology,
            rows: vec![
                row(Scenario::Control, Some(0.1 + 0.2), None),
                row(
                    Scenario::Pathology(PathologyCase::ClusteredExtremes),
                    None,
                    Some("DuplicatePoints"),
                ),
            ],
        }
    }

    #[test]
    fn round_trip() {
        let t = table();
        let meta = vec![("seed".to_string(), "42".to_string())];
        let text = format_results(&t, &meta).unwrap();
        assert!(text.starts_with("# seed: 42\nexperiment,problem,"));
        assert!(text.contains(",SPD,,max,,,DuplicatePoints"));
        assert_eq!(parse_results(&text).unwrap(), t);
    }

    #[test]
    fn rejects_bad_header_and_empty() {
        assert!(matches!(
            parse_results("a,b\n1,2\n"),
            Err(Error::Parse { .. })
        ));
        let header = COLUMNS.join(",") + "\n";
        assert_eq!(parse_results(&header), Err(Error::EmptyTable));
    }
}
