//! Rendering census reports as markdown, CSV or JSON.

use std::fmt::Write as _;

use crate::census::CensusReport;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

impl TableFormat {
    pub fn parse(name: &str) -> Option<TableFormat> {
        match name {
            "markdown" | "md" => Some(TableFormat::Markdown),
            "csv" => Some(TableFormat::Csv),
            "json" => Some(TableFormat::Json),
            _ => None,
        }
    }
}

/// Renders a report. Output is deterministic: records arrive sorted and
/// are emitted verbatim.
pub fn emit_table(report: &CensusReport, format: TableFormat) -> String {
    match format {
        TableFormat::Markdown => {
            let mut out = String::new();
            out.push_str("Sequence | Multiplicity\n--- | ---\n");
            for rec in &report.records {
                let marker = if rec.tree_realisable { "* " } else { "" };
                writeln!(out, "{}{} | {}", marker, rec.sequence, rec.multiplicity)
                    .expect("string write");
            }
            writeln!(
                out,
                "\n{} graphs, {} sequences",
                report.total_graphs, report.total_sequences
            )
            .expect("string write");
            out
        }
        TableFormat::Csv => {
            let mut out = String::from("sequence,multiplicity,tree_realisable\n");
            for rec in &report.records {
                writeln!(
                    out,
                    "\"{}\",{},{}",
                    rec.sequence, rec.multiplicity, rec.tree_realisable
                )
                .expect("string write");
            }
            out
        }
        TableFormat::Json => {
            let mut out = serde_json::to_string(report).expect("report serializes");
            out.push('\n');
            out
        }
    }
}
