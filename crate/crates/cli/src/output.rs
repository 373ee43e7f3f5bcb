//! Rendering of command documents as JSON, CSV or LaTeX.

use serde_json::{Map, Value};

use crate::Format;

/// A table with metadata. Every row has one value per column.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub meta: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    /// Preformatted LaTeX rows, used instead of the generic tabular body.
    pub latex_rows: Option<Vec<String>>,
    pub failed: bool,
}

impl Document {
    pub fn new(command: &str, columns: Vec<&'static str>) -> Self {
        let mut meta = Map::new();
        meta.insert("command".into(), command.into());
        Self {
            meta,
            columns,
            ..Default::default()
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

pub fn render(doc: &Document, format: Format) -> String {
    match format {
        Format::Json => json(doc),
        Format::Csv => csv(doc),
        Format::Latex => latex(doc),
    }
}

fn json(doc: &Document) -> String {
    let rows: Vec<Value> = doc
        .rows
        .iter()
        .map(|r| {
            Value::Object(
                doc.columns
                    .iter()
                    .map(|c| c.to_string())
                    .zip(r.iter().cloned())
                    .collect(),
            )
        })
        .collect();
    let mut top = Map::new();
    top.insert("meta".into(), Value::Object(doc.meta.clone()));
    top.insert("rows".into(), Value::Array(rows));
    let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("serializable");
    s.push('\n');
    s
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn csv(doc: &Document) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&doc.columns).expect("in-memory write");
    for r in &doc.rows {
        w.write_record(r.iter().map(cell)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn latex(doc: &Document) -> String {
    let mut out = match &doc.latex_rows {
        Some(rows) => rows.join("\n\\\\"),
        None => {
            let mut lines = vec![doc.columns.join(" & ")];
            lines.extend(
                doc.rows
                    .iter()
                    .map(|r| r.iter().map(cell).collect::<Vec<_>>().join(" & ")),
            );
            lines.join(" \\\\\n")
        }
    };
    out.push('\n');
    out
}
