//! Ordered key/value reports rendered as indented text or as JSON arrays of
//! `[key, value]` pairs.

use frw_core::fmt_real;
use serde_json::Value as Json;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Real(f64),
    Bool(bool),
    Text(String),
    List(Vec<Value>),
    Section(Report),
}

impl From<i64> for Value {
    fn from(x: i64) -> Self {
        Value::Int(x)
    }
}

impl From<u64> for Value {
    fn from(x: u64) -> Self {
        Value::Int(x as i64)
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Int(x as i64)
    }
}

impl From<u32> for Value {
    fn from(x: u32) -> Self {
        Value::Int(i64::from(x))
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

impl From<bool> for Value {
    fn from(x: bool) -> Self {
        Value::Bool(x)
    }
}

impl From<&str> for Value {
    fn from(x: &str) -> Self {
        Value::Text(x.to_string())
    }
}

impl From<String> for Value {
    fn from(x: String) -> Self {
        Value::Text(x)
    }
}

impl From<Report> for Value {
    fn from(x: Report) -> Self {
        Value::Section(x)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(x: Vec<T>) -> Self {
        Value::List(x.into_iter().map(Into::into).collect())
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.entries.push((key.into(), value.into()));
        self
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0);
        out
    }

    fn write_text(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        for (key, value) in &self.entries {
            match value {
                Value::Section(r) => {
                    out.push_str(&format!("{pad}{key}:\n"));
                    r.write_text(out, depth + 1);
                }
                Value::List(items)
                    if items
                        .iter()
                        .any(|v| matches!(v, Value::Section(_) | Value::List(_))) =>
                {
                    out.push_str(&format!("{pad}{key}:\n"));
                    for item in items {
                        match item {
                            Value::Section(r) => {
                                out.push_str(&format!("{pad}  -\n"));
                                r.write_text(out, depth + 2);
                            }
                            other => out.push_str(&format!("{pad}  - {}\n", scalar_text(other))),
                        }
                    }
                }
                Value::List(items) if items.is_empty() => {
                    out.push_str(&format!("{pad}{key}: []\n"))
                }
                Value::List(items) => {
                    out.push_str(&format!("{pad}{key}:\n"));
                    for item in items {
                        out.push_str(&format!("{pad}  - {}\n", scalar_text(item)));
                    }
                }
                other => out.push_str(&format!("{pad}{key}: {}\n", scalar_text(other))),
            }
        }
    }

    pub fn to_json(&self) -> Json {
        Json::Array(
            self.entries
                .iter()
                .map(|(k, v)| Json::Array(vec![Json::String(k.clone()), value_json(v)]))
                .collect(),
        )
    }

    /// Every key at every depth, in document order.
    pub fn keys(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_keys(&mut out);
        out
    }

    fn collect_keys(&self, out: &mut Vec<String>) {
        for (k, v) in &self.entries {
            out.push(k.clone());
            collect_value_keys(v, out);
        }
    }
}

fn collect_value_keys(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Section(r) => r.collect_keys(out),
        Value::List(items) => items.iter().for_each(|i| collect_value_keys(i, out)),
        _ => {}
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Int(x) => x.to_string(),
        Value::Real(x) => fmt_real(*x),
        Value::Bool(x) => x.to_string(),
        Value::Text(s) => s.clone(),
        Value::List(_) | Value::Section(_) => unreachable!("nested values are rendered as blocks"),
    }
}

fn value_json(v: &Value) -> Json {
    match v {
        Value::Int(x) => Json::from(*x),
        Value::Real(x) => {
            let rounded: f64 = fmt_real(*x).parse().unwrap_or(*x);
            serde_json::Number::from_f64(rounded).map_or(Json::Null, Json::Number)
        }
        Value::Bool(x) => Json::Bool(*x),
        Value::Text(s) => Json::String(s.clone()),
        Value::List(items) => Json::Array(items.iter().map(value_json).collect()),
        Value::Section(r) => r.to_json(),
    }
}
