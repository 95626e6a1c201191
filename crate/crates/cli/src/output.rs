//! Record rendering. JSON output is one object per line; rationals are
//! always strings.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use hybrid_horadam::repr::ToJson;
use hybrid_horadam::sweep::{Outcome, SweepRecord, SweepResult};
use hybrid_horadam::{Params, Quad, Rational};
use serde_json::{Map, Value};

use crate::error::CliError;
use crate::Format;

pub enum Cell {
    Int(i64),
    Rat(Rational),
    /// JSON `{rat, rad}`; two CSV columns `<name>_rat`, `<name>_rad`.
    Quad(Quad),
    Text(String),
}

#[derive(Default)]
pub struct Row(Vec<(&'static str, Cell)>);

impl Row {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &'static str, cell: Cell) {
        self.0.push((name, cell));
    }

    fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (name, cell) in &self.0 {
            let v = match cell {
                Cell::Int(n) => Value::from(*n),
                Cell::Rat(x) => x.to_json(),
                Cell::Quad(q) => q.to_json(),
                Cell::Text(s) => Value::String(s.clone()),
            };
            m.insert((*name).into(), v);
        }
        Value::Object(m)
    }

    fn csv_header(&self) -> Vec<String> {
        let mut h = Vec::new();
        for (name, cell) in &self.0 {
            match cell {
                Cell::Quad(_) => {
                    h.push(format!("{name}_rat"));
                    h.push(format!("{name}_rad"));
                }
                _ => h.push((*name).into()),
            }
        }
        h
    }

    fn csv_fields(&self) -> Vec<String> {
        let mut f = Vec::new();
        for (_, cell) in &self.0 {
            match cell {
                Cell::Int(n) => f.push(n.to_string()),
                Cell::Rat(x) => f.push(x.to_string()),
                Cell::Quad(q) => {
                    f.push(q.rat().to_string());
                    f.push(q.rad().to_string());
                }
                Cell::Text(s) => f.push(s.clone()),
            }
        }
        f
    }
}

/// Buffered stdout or file.
pub struct Sink {
    path: Option<PathBuf>,
    w: Box<dyn Write>,
}

impl Sink {
    pub fn open(path: Option<&Path>) -> Result<Self, CliError> {
        let w: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|source| CliError::Io {
                path: p.to_path_buf(),
                source,
            })?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Self {
            path: path.map(Path::to_path_buf),
            w,
        })
    }

    fn io(&self, source: io::Error) -> CliError {
        CliError::Io {
            path: self.path.clone().unwrap_or_else(|| "<stdout>".into()),
            source,
        }
    }

    pub fn text(&mut self, s: &str) -> Result<(), CliError> {
        self.w.write_all(s.as_bytes()).map_err(|e| self.io(e))
    }

    fn json_line(&mut self, v: &Value) -> Result<(), CliError> {
        serde_json::to_writer(&mut self.w, v).map_err(|e| self.io(e.into()))?;
        self.w.write_all(b"\n").map_err(|e| self.io(e))
    }

    pub fn rows(&mut self, rows: &[Row], format: Format) -> Result<(), CliError> {
        match format {
            Format::Json => {
                for r in rows {
                    self.json_line(&r.to_json())?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut self.w);
                if let Some(first) = rows.first() {
                    w.write_record(first.csv_header())?;
                }
                for r in rows {
                    w.write_record(r.csv_fields())?;
                }
                w.flush().map_err(|e| CliError::Io {
                    path: self.path.clone().unwrap_or_else(|| "<stdout>".into()),
                    source: e,
                })?;
            }
        }
        Ok(())
    }

    /// Every check of a sweep. CSV columns:
    /// `identity,a,b,c,w0,w1,indices,status,detail`.
    pub fn records(&mut self, result: &SweepResult, format: Format) -> Result<(), CliError> {
        match format {
            Format::Json => {
                for r in &result.records {
                    self.json_line(&r.to_json(result.params_of(r)))?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut self.w);
                w.write_record(["identity", "a", "b", "c", "w0", "w1", "indices", "status", "detail"])?;
                for r in &result.records {
                    let p = result.params_of(r);
                    let mut fields = vec![r.identity.name().to_string()];
                    fields.extend([p.a(), p.b(), p.c(), p.w0(), p.w1()].map(|x| x.to_string()));
                    fields.push(indices_text(&r.indices, " "));
                    fields.push(r.status().into());
                    fields.push(detail(r));
                    w.write_record(&fields)?;
                }
                w.flush().map_err(|e| CliError::Io {
                    path: self.path.clone().unwrap_or_else(|| "<stdout>".into()),
                    source: e,
                })?;
            }
        }
        Ok(())
    }

    pub fn finish(mut self) -> Result<(), CliError> {
        self.w.flush().map_err(|e| self.io(e))
    }
}

fn indices_text(ix: &[i64], sep: &str) -> String {
    ix.iter().map(i64::to_string).collect::<Vec<_>>().join(sep)
}

/// Failing part names (with their inner index when present) or the error text.
fn detail(r: &SweepRecord) -> String {
    match &r.outcome {
        Outcome::Passed => String::new(),
        Outcome::Failed(parts) => parts
            .iter()
            .map(|p| match p.at.as_slice() {
                [] => p.name.clone(),
                at => format!("{}[{}]", p.name, indices_text(at, ",")),
            })
            .collect::<Vec<_>>()
            .join(";"),
        Outcome::Error { error, .. } => error.to_string(),
    }
}

/// One stderr line for a check that did not pass.
pub fn diagnostic(r: &SweepRecord, p: &Params) -> String {
    format!(
        "{} {} at (a, b, c, w0, w1) = ({}, {}, {}, {}, {}), indices [{}]: {}",
        r.identity,
        r.status(),
        p.a(),
        p.b(),
        p.c(),
        p.w0(),
        p.w1(),
        indices_text(&r.indices, ", "),
        detail(r)
    )
}
