use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Rows of plain cells; every cell is an integer or a digit-word, so CSV
/// needs no quoting.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn aligned(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let mut out = line(&self.header);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }

    fn csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Everything a subcommand produces.
pub struct Output {
    pub json: Value,
    pub table: Table,
    /// `key: value` lines shown above the table.
    pub summary: Vec<(String, String)>,
    pub passed: bool,
    /// Printed to stderr when `passed` is false.
    pub counterexample: Option<String>,
    /// Replaces the table and CSV renderings when set.
    pub plain: Option<String>,
}

impl Output {
    pub fn new(json: Value, table: Table) -> Self {
        Output {
            json,
            table,
            summary: Vec::new(),
            passed: true,
            counterexample: None,
            plain: None,
        }
    }

    pub fn summary(mut self, key: &str, value: impl ToString) -> Self {
        self.summary.push((key.to_string(), value.to_string()));
        self
    }

    pub fn verdict(mut self, passed: bool, counterexample: Option<String>) -> Self {
        self.passed = passed;
        self.counterexample = counterexample;
        self
    }
}

/// Canonical JSON: keys sorted, two-space indent, trailing newline.
pub fn json_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
    s.push('\n');
    s
}

pub fn render(out: &Output, format: Format) -> String {
    if let (Some(plain), Format::Csv | Format::Table) = (&out.plain, format) {
        return plain.clone();
    }
    match format {
        Format::Json => json_text(&out.json),
        Format::Csv => out.table.csv(),
        Format::Table => {
            let mut s = String::new();
            for (k, v) in &out.summary {
                let _ = writeln!(s, "{k}: {v}");
            }
            if !out.summary.is_empty() && !out.table.header.is_empty() {
                s.push('\n');
            }
            if !out.table.header.is_empty() {
                s.push_str(&out.table.aligned());
            }
            s
        }
    }
}
