//! Rendering of command reports as JSON or CSV.

use serde_json::{Map, Value};

use adlv_core::verify::SCHEMA_VERSION;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    /// Two columns, one row per scalar field of a JSON object.
    pub fn key_value(body: &Map<String, Value>) -> Self {
        let mut t = Table::new(&["key", "value"]);
        for (k, v) in body {
            t.push(vec![k.clone(), cell(v)]);
        }
        t
    }
}

#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub body: Map<String, Value>,
    pub table: Table,
    /// Set when an invariant checked by the command fails.
    pub violation: Option<String>,
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut body = self.body.clone();
                body.insert("command".into(), Value::from(self.command));
                body.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
                let mut s = String::new();
                write_json(&Value::Object(body), 0, &mut s);
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(Vec::new());
                let io = |e: csv::Error| CliError::Validation(e.to_string());
                w.write_record(&self.table.header).map_err(io)?;
                for row in &self.table.rows {
                    w.write_record(row).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Validation(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| CliError::Validation(e.to_string()))
            }
        }
    }
}

/// Indented JSON with keys in map order (sorted) and arrays of scalars, or
/// of arrays of scalars, kept on one line.
pub fn write_json(v: &Value, indent: usize, out: &mut String) {
    let pad = |k: usize| "  ".repeat(k);
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_json(x, indent + 1, out);
                if i + 1 < m.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if !items.iter().all(is_flat) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_json(x, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(is_scalar),
        other => is_scalar(other),
    }
}

/// Compact text for a table cell: scalars as themselves, arrays joined by
/// `,` with nested arrays separated by `;`.
pub fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().any(Value::is_array) => {
            items.iter().map(cell).collect::<Vec<_>>().join(";")
        }
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn cells() {
        assert_eq!(cell(&json!([[1, 0], [0, 1]])), "1,0;0,1");
        assert_eq!(cell(&json!("2/3")), "2/3");
        assert_eq!(cell(&json!(true)), "true");
    }

    #[test]
    fn nested_json_layout() {
        let mut s = String::new();
        write_json(&json!({"a": [[1, 2], [3]], "b": [{"c": "1/2"}], "e": {}}), 0, &mut s);
        assert_eq!(s, "{\n  \"a\": [[1,2],[3]],\n  \"b\": [\n    {\n      \"c\": \"1/2\"\n    }\n  ],\n  \"e\": {}\n}");
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back, json!({"a": [[1, 2], [3]], "b": [{"c": "1/2"}], "e": {}}));
    }

    #[test]
    fn json_has_sorted_keys_and_newline() {
        let mut body = Map::new();
        body.insert("zeta".into(), json!([1]));
        body.insert("alpha".into(), json!(2));
        let r = Report {
            command: "x",
            body,
            table: Table::default(),
            violation: None,
        };
        let s = r.render(Format::Json).unwrap();
        assert!(s.ends_with("}\n"));
        let a = s.find("alpha").unwrap();
        let c = s.find("command").unwrap();
        let z = s.find("zeta").unwrap();
        assert!(a < c && c < z);
    }

    #[test]
    fn csv_quotes_and_lf() {
        let mut t = Table::new(&["k", "v"]);
        t.push(vec!["a".into(), "1,2".into()]);
        let r = Report {
            command: "x",
            body: Map::new(),
            table: t,
            violation: None,
        };
        assert_eq!(r.render(Format::Csv).unwrap(), "k,v\na,\"1,2\"\n");
    }
}
