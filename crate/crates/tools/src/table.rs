//! Algorithm × system grids in the shape of the published tables.

use std::fmt::Write as _;

use serde_json::json;

use crate::experiment::ExperimentResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    ZeroReductions,
    BasisSize,
    ReducedSize,
}

impl Metric {
    pub fn name(&self) -> &'static str {
        match self {
            Self::ZeroReductions => "zero_reductions",
            Self::BasisSize => "basis_size",
            Self::ReducedSize => "reduced_size",
        }
    }

    fn value(&self, r: &ExperimentResult) -> Option<u64> {
        match self {
            Self::ZeroReductions => Some(r.zero_reductions),
            Self::BasisSize => Some(r.basis_size),
            Self::ReducedSize => r.reduced_size,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Text,
    Json,
}

fn first_seen<'a>(items: impl Iterator<Item = &'a str>) -> Vec<&'a str> {
    let mut out: Vec<&str> = Vec::new();
    for s in items {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Rows are algorithms and columns are systems, both in order of first
/// appearance. Missing cells are empty (CSV), `-` (text) or `null` (JSON).
pub fn emit_table(results: &[ExperimentResult], metric: Metric, format: Format) -> String {
    let systems = first_seen(results.iter().map(|r| r.system.as_str()));
    let algorithms = first_seen(results.iter().map(|r| r.algorithm));
    let cell = |alg: &str, sys: &str| {
        results
            .iter()
            .find(|r| r.algorithm == alg && r.system == sys)
            .and_then(|r| metric.value(r))
    };
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let header: Vec<&str> = std::iter::once("algorithm").chain(systems.iter().copied()).collect();
            w.write_record(&header).expect("in-memory write");
            for alg in &algorithms {
                let mut row = vec![alg.to_string()];
                row.extend(systems.iter().map(|s| cell(alg, s).map_or(String::new(), |v| v.to_string())));
                w.write_record(&row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Text => {
            let mut rows: Vec<Vec<String>> = vec![std::iter::once(metric.name())
                .chain(systems.iter().copied())
                .map(String::from)
                .collect()];
            for alg in &algorithms {
                let mut row = vec![alg.to_string()];
                row.extend(systems.iter().map(|s| cell(alg, s).map_or("-".into(), |v| v.to_string())));
                rows.push(row);
            }
            align(&rows)
        }
        Format::Json => {
            let rows: Vec<_> = algorithms
                .iter()
                .map(|alg| {
                    let cells: Vec<_> = systems.iter().map(|s| cell(alg, s)).collect();
                    json!({ "algorithm": alg, "values": cells })
                })
                .collect();
            let doc = json!({ "metric": metric.name(), "systems": systems, "rows": rows });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
    }
}

/// Left-aligns the first column and right-aligns the rest.
pub(crate) fn align(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, v) in row.iter().enumerate() {
            if c == 0 {
                let _ = write!(line, "{v:<w$}", w = widths[c]);
            } else {
                let _ = write!(line, "  {v:>w$}", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
