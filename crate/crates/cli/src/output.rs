//! Tables and their json / csv / pretty renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_traits::ToPrimitive;
use osp_capelli::exact_linalg::{format_rational, Rational};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Pretty,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Rat(Rational),
    Bool(bool),
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Rat(r) => format_rational(r),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => json!(s),
            Cell::Int(i) => json!(i),
            Cell::Rat(r) => json!(format_rational(r)),
            Cell::Bool(b) => json!(b),
        }
    }

    fn approx(&self) -> Option<String> {
        match self {
            Cell::Rat(r) => Some(r.to_f64().map_or_else(|| "nan".into(), |f| f.to_string())),
            _ => None,
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<Rational> for Cell {
    fn from(r: Rational) -> Self {
        Cell::Rat(r)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<u32> for Cell {
    fn from(i: u32) -> Self {
        Cell::Int(i64::from(i))
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width of table {}", self.name);
        self.rows.push(row);
    }

    /// Adds an `<col>_approx` column after every column holding rationals.
    fn with_decimals(&self) -> Table {
        let rat_cols: Vec<bool> = (0..self.columns.len())
            .map(|j| self.rows.iter().any(|r| matches!(r[j], Cell::Rat(_))))
            .collect();
        let mut columns = Vec::new();
        for (c, &is_rat) in self.columns.iter().zip(&rat_cols) {
            columns.push(c.clone());
            if is_rat {
                columns.push(format!("{c}_approx"));
            }
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = Vec::new();
                for (cell, &is_rat) in r.iter().zip(&rat_cols) {
                    out.push(cell.clone());
                    if is_rat {
                        out.push(Cell::Text(cell.approx().unwrap_or_default()));
                    }
                }
                out
            })
            .collect();
        Table { name: self.name.clone(), columns, rows }
    }
}

/// Everything a command prints on stdout.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub summary: Vec<(String, Cell)>,
    pub tables: Vec<Table>,
    /// `None` for purely informational commands.
    pub passed: Option<bool>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self { command: command.into(), summary: Vec::new(), tables: Vec::new(), passed: None }
    }

    pub fn field(&mut self, key: &str, value: impl Into<Cell>) {
        self.summary.push((key.into(), value.into()));
    }

    pub fn render(&self, format: Format, decimal: bool) -> String {
        let tables: Vec<Table> = if decimal {
            self.tables.iter().map(Table::with_decimals).collect()
        } else {
            self.tables.clone()
        };
        let mut summary = self.summary.clone();
        if decimal {
            let approx: Vec<(String, Cell)> = summary
                .iter()
                .filter_map(|(k, v)| v.approx().map(|a| (format!("{k}_approx"), Cell::Text(a))))
                .collect();
            summary.extend(approx);
        }
        match format {
            Format::Json => self.render_json(&summary, &tables),
            Format::Csv => render_csv(&summary, &tables, self.status()),
            Format::Pretty => self.render_pretty(&summary, &tables),
        }
    }

    fn status(&self) -> Option<&'static str> {
        self.passed.map(|p| if p { "pass" } else { "fail" })
    }

    fn render_json(&self, summary: &[(String, Cell)], tables: &[Table]) -> String {
        let mut root = Map::new();
        root.insert("command".into(), json!(self.command));
        if let Some(s) = self.status() {
            root.insert("status".into(), json!(s));
        }
        let mut sum = Map::new();
        for (k, v) in summary {
            sum.insert(k.clone(), v.to_json());
        }
        root.insert("summary".into(), Value::Object(sum));
        let mut tabs = Map::new();
        for t in tables {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|r| {
                    let mut o = Map::new();
                    for (c, v) in t.columns.iter().zip(r) {
                        o.insert(c.clone(), v.to_json());
                    }
                    Value::Object(o)
                })
                .collect();
            tabs.insert(t.name.clone(), Value::Array(rows));
        }
        root.insert("tables".into(), Value::Object(tabs));
        let mut s = serde_json::to_string_pretty(&Value::Object(root)).expect("json values serialize");
        s.push('\n');
        s
    }

    fn render_pretty(&self, summary: &[(String, Cell)], tables: &[Table]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        let width = summary.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in summary {
            let _ = writeln!(out, "  {k:<width$}  {}", v.render());
        }
        for t in tables {
            let _ = writeln!(out, "\n[{}]", t.name);
            let cells: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(Cell::render).collect()).collect();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|j| cells.iter().map(|r| r[j].len()).chain([t.columns[j].len()]).max().unwrap_or(0))
                .collect();
            let line = |vals: &[String]| {
                vals.iter()
                    .zip(&widths)
                    .map(|(v, w)| format!("{v:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            let _ = writeln!(out, "{}", line(&t.columns));
            for r in &cells {
                let _ = writeln!(out, "{}", line(r));
            }
        }
        if let Some(s) = self.status() {
            let _ = writeln!(out, "\nstatus: {s}");
        }
        out
    }
}

fn render_csv(summary: &[(String, Cell)], tables: &[Table], status: Option<&str>) -> String {
    let mut sections = Vec::new();
    let mut head = Table::new("summary", &["key", "value"]);
    if let Some(s) = status {
        head.push(vec![Cell::text("status"), Cell::text(s)]);
    }
    for (k, v) in summary {
        head.push(vec![Cell::text(k.clone()), v.clone()]);
    }
    sections.push(head);
    sections.extend(tables.iter().cloned());
    let mut out = String::new();
    for (i, t) in sections.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "# {}", t.name);
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&t.columns).expect("in-memory write");
        for r in &t.rows {
            w.write_record(r.iter().map(Cell::render)).expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input"));
    }
    out
}
