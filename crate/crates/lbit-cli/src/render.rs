//! Byte-deterministic rendering of reports in the three output formats.

use std::fmt::Write as _;

use serde::Serialize;

use crate::report::{Report, Row};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Records,
    Csv,
}

pub fn render(report: &Report, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Table => Ok(table(report)),
        Format::Records => records(report),
        Format::Csv => csv_out(report),
    }
}

fn table(report: &Report) -> String {
    let m = &report.meta;
    let mut out = String::new();
    let _ = writeln!(out, "# {}", m.experiment);
    let _ = writeln!(
        out,
        "# version {} · schema {} · n_tot {} · seed {} · samples {}",
        m.version, m.schema, m.n_tot, m.seed, m.samples
    );
    for (k, v) in &m.params {
        let _ = writeln!(out, "# {k} = {v}");
    }

    let name_w = report
        .rows
        .iter()
        .map(|r| r.name.chars().count())
        .max()
        .unwrap_or(4)
        .max(4);
    let exact_w = report
        .rows
        .iter()
        .filter_map(|r| r.exact.as_ref().map(|e| e.chars().count()))
        .max()
        .unwrap_or(5)
        .max(5);

    let mut section = None::<&str>;
    for row in &report.rows {
        if section != Some(row.section.as_str()) {
            section = Some(row.section.as_str());
            let _ = writeln!(out, "\n[{}]", row.section);
        }
        let exact = row.exact.as_deref().unwrap_or("");
        let approx = row.approx.as_deref().unwrap_or("");
        let mut line = format!(
            "  {:<name_w$}  {:>exact_w$}  {:>15}",
            row.name, exact, approx
        );
        if let Some(n) = row.samples {
            let _ = write!(line, "  [n={n}]");
        }
        if let Some(note) = &row.note {
            let _ = write!(line, "  {note}");
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

#[derive(Serialize)]
struct MetaRecord<'a> {
    record: &'static str,
    #[serde(flatten)]
    meta: &'a crate::report::Meta,
}

#[derive(Serialize)]
struct RowRecord<'a> {
    record: &'static str,
    #[serde(flatten)]
    row: &'a Row,
}

/// Line-delimited JSON: one `meta` record followed by one `row` record per
/// row, fields in fixed order.
fn records(report: &Report) -> anyhow::Result<String> {
    let mut out = String::new();
    let meta = MetaRecord {
        record: "meta",
        meta: &report.meta,
    };
    out.push_str(&serde_json::to_string(&meta)?);
    out.push('\n');
    for row in &report.rows {
        let rec = RowRecord {
            record: "row",
            row,
        };
        out.push_str(&serde_json::to_string(&rec)?);
        out.push('\n');
    }
    Ok(out)
}

/// CSV with a fixed header; metadata is encoded as leading rows in the
/// `meta` section so the grid stays uniform.
fn csv_out(report: &Report) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["section", "name", "exact", "approx", "samples", "note"])?;
    let m = &report.meta;
    let meta_rows = [
        ("experiment", m.experiment.clone()),
        ("version", m.version.clone()),
        ("schema", m.schema.to_string()),
        ("n_tot", m.n_tot.to_string()),
        ("seed", m.seed.to_string()),
        ("samples", m.samples.to_string()),
    ];
    for (name, value) in meta_rows {
        w.write_record(["meta", name, "", "", "", &value])?;
    }
    for (k, v) in &m.params {
        w.write_record(["meta", &format!("param:{k}"), "", "", "", v])?;
    }
    for row in &report.rows {
        w.write_record([
            row.section.as_str(),
            row.name.as_str(),
            row.exact.as_deref().unwrap_or(""),
            row.approx.as_deref().unwrap_or(""),
            &row.samples.map(|n| n.to_string()).unwrap_or_default(),
            row.note.as_deref().unwrap_or(""),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
