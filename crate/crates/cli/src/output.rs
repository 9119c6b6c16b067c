use std::io::Write;

use clap::ValueEnum;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One line of output.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub command: String,
    #[serde(serialize_with = "ordered_map")]
    pub inputs: Vec<(String, String)>,
    pub result: String,
    pub valid: Option<bool>,
    #[serde(rename = "ref")]
    pub reference: String,
    /// Human-readable validity condition, shown in text output only.
    #[serde(skip)]
    pub condition: Option<String>,
}

fn ordered_map<S: Serializer>(pairs: &[(String, String)], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(pairs.len()))?;
    for (k, v) in pairs {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

impl Record {
    pub fn new(command: &str, reference: &str, result: impl ToString) -> Self {
        Self {
            command: command.to_string(),
            inputs: Vec::new(),
            result: result.to_string(),
            valid: None,
            reference: reference.to_string(),
            condition: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn validity(mut self, valid: bool, condition: &str) -> Self {
        self.valid = Some(valid);
        self.condition = Some(condition.to_string());
        self
    }

    fn inputs_text(&self, sep: &str) -> String {
        self.inputs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(sep)
    }

    fn valid_text(&self) -> String {
        match (self.valid, &self.condition) {
            (Some(true), Some(c)) => format!("in range ({c})"),
            (Some(false), Some(c)) => format!("outside range ({c})"),
            (Some(v), None) => v.to_string(),
            (None, _) => "-".to_string(),
        }
    }
}

pub fn write_records(
    out: &mut impl Write,
    records: &[Record],
    format: Format,
) -> std::io::Result<()> {
    match format {
        Format::Text => write_text(out, records),
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["command", "inputs", "result", "valid", "ref"])?;
            for r in records {
                let valid = r.valid.map(|v| v.to_string()).unwrap_or_default();
                w.write_record([
                    &r.command,
                    &r.inputs_text(";"),
                    &r.result,
                    &valid,
                    &r.reference,
                ])?;
            }
            w.flush()
        }
    }
}

fn write_text(out: &mut impl Write, records: &[Record]) -> std::io::Result<()> {
    let rows: Vec<[String; 5]> = records
        .iter()
        .map(|r| {
            [
                r.command.clone(),
                r.inputs_text(" "),
                r.result.clone(),
                r.valid_text(),
                r.reference.clone(),
            ]
        })
        .collect();
    let mut widths = [0usize; 5];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    for row in &rows {
        let mut line = String::new();
        for (i, (cell, w)) in row.iter().zip(widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < row.len() {
                line.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
            }
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    Ok(())
}
