use std::fmt::Display;

use clap::ValueEnum;
use serde_json::{Map, Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Exact integer as a JSON number, however large.
pub fn int(v: impl Display) -> Value {
    let text = v.to_string();
    Value::Number(
        text.parse::<Number>()
            .expect("integers render as JSON numbers"),
    )
}

pub fn opt_int(v: Option<impl Display>) -> Value {
    v.map_or(Value::Null, int)
}

pub fn text(v: impl Display) -> Value {
    Value::String(v.to_string())
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

/// Rows of one shape. CSV gets a header line; JSON gets an array of objects,
/// or a bare object when `single` is set.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn objects(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|row| {
                let map: Map<String, Value> = self
                    .header
                    .iter()
                    .map(|h| h.to_string())
                    .zip(row.iter().cloned())
                    .collect();
                Value::Object(map)
            })
            .collect()
    }

    pub fn render(&self, format: Format, single: bool) -> String {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for row in &self.rows {
                    w.write_record(row.iter().map(cell))
                        .expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
            }
            Format::Json => {
                let mut objects = self.objects();
                let value = if single && objects.len() == 1 {
                    objects.remove(0)
                } else {
                    Value::Array(objects)
                };
                let mut s = serde_json::to_string_pretty(&value).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}
