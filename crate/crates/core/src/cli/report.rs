use std::io::{self, Write};

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Debug, Default)]
pub struct Grid {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Grid {
    pub fn new(columns: &[&str]) -> Self {
        Grid { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        self.rows.push(row);
    }

    fn to_json(&self) -> Value {
        json!({ "columns": self.columns, "rows": self.rows })
    }
}

/// Everything a subcommand prints, independent of the output format.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    /// The per-degree (or per-entry) table, if any.
    pub table: Option<Grid>,
    /// Secondary table: shown after the main one and preferred for CSV.
    pub detail: Option<Grid>,
    pub truncation_bound: Option<i64>,
    /// Process exit status: 0 pass, 1 mismatch.
    pub status: i32,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            table: None,
            detail: None,
            truncation_bound: None,
            status: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut results = self.results.clone();
        if let Some(t) = &self.table {
            results.insert("table".into(), t.to_json());
        }
        if let Some(t) = &self.detail {
            results.insert("detail".into(), t.to_json());
        }
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": results,
            "truncation_bound": self.truncation_bound,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<()> {
        let io = |e: io::Error| Error::Config(format!("cannot write output: {e}"));
        match format {
            Format::Json => {
                let text = serde_json::to_string_pretty(&self.to_json()).expect("serializable report");
                writeln!(out, "{text}").map_err(io)
            }
            Format::Csv => self.write_csv(out),
            Format::Table => self.write_table(out).map_err(io),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> Result<()> {
        let csv_err = |e: csv::Error| Error::Config(format!("cannot write csv: {e}"));
        let mut w = csv::Writer::from_writer(out);
        match self.detail.as_ref().or(self.table.as_ref()) {
            Some(grid) => {
                w.write_record(&grid.columns).map_err(csv_err)?;
                for row in &grid.rows {
                    w.write_record(row.iter().map(cell)).map_err(csv_err)?;
                }
            }
            None => {
                w.write_record(["key", "value"]).map_err(csv_err)?;
                for (k, v) in &self.results {
                    w.write_record([k.as_str(), &cell(v)]).map_err(csv_err)?;
                }
            }
        }
        w.flush().map_err(|e| Error::Config(format!("cannot write csv: {e}")))
    }

    fn write_table(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}", self.command)?;
        let keys = self.inputs.keys().chain(self.results.keys());
        let width = keys.map(String::len).max().unwrap_or(0);
        for (k, v) in &self.inputs {
            writeln!(out, "  {k:<width$}  {}", cell(v))?;
        }
        for (k, v) in &self.results {
            if !v.is_object() {
                writeln!(out, "  {k:<width$}  {}", cell(v))?;
            }
        }
        for grid in [&self.table, &self.detail].into_iter().flatten() {
            writeln!(out)?;
            write_grid(grid, out)?;
        }
        if let Some(d) = self.truncation_bound {
            writeln!(out)?;
            writeln!(out, "computed in degrees <= {d} only; nothing is claimed above that bound")?;
        }
        Ok(())
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(";"),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn write_grid(grid: &Grid, out: &mut dyn Write) -> io::Result<()> {
    let cells: Vec<Vec<String>> = grid.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
    let widths: Vec<usize> = (0..grid.columns.len())
        .map(|i| cells.iter().map(|r| r[i].len()).chain([grid.columns[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |items: Vec<&str>| -> String {
        let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(grid.columns.iter().map(String::as_str).collect()))?;
    for r in &cells {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}
