use serde_json::{json, Value};

use crate::algebra::{MultiPoly, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
}

impl Status {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Ok
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
        }
    }
}

/// One result rendered three ways.
#[derive(Debug, Clone, PartialEq)]
pub struct Payload {
    pub text: String,
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Payload {
    pub fn scalar(name: &str, value: impl ToString) -> Self {
        let v = value.to_string();
        Payload {
            text: v.clone(),
            json: json!({ name: v }),
            header: vec![name.to_string()],
            rows: vec![vec![v]],
        }
    }

    pub fn polynomial<C: Ring>(p: &MultiPoly<C>) -> Self {
        let rows: Vec<Vec<String>> = p.terms().map(|(m, c)| vec![m.to_string(), c.to_string()]).collect();
        Payload {
            text: p.to_string(),
            json: json!({ "polynomial": p.to_string(), "terms": rows.len() }),
            header: vec!["monomial".into(), "coefficient".into()],
            rows,
        }
    }

    pub fn table(json: Value, header: &[&str], rows: Vec<Vec<String>>, text: String) -> Self {
        Payload { text, json, header: header.iter().map(|h| h.to_string()).collect(), rows }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Payload,
    pub timing_ms: u128,
}

impl CommandResult {
    /// Stdout rendering; timing is deliberately left out so that output is
    /// identical across runs.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.payload.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let v = json!({ "status": self.status.as_str(), "payload": self.payload.json });
                let mut s = serde_json::to_string_pretty(&v).expect("serialisable payload");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.payload.header).expect("in-memory write");
                for r in &self.payload.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
            }
        }
    }
}
