//! Report documents and their three renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error("csv output: {0}")]
    Utf8(#[from] std::string::FromUtf8Error),
    #[error("csv output: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub key: String,
    pub value: String,
}

impl Entry {
    pub fn new(key: impl Into<String>, value: impl ToString) -> Self {
        Entry {
            key: key.into(),
            value: value.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail(_) => "fail",
            Verdict::Skipped(_) => "skipped",
        }
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(r) | Verdict::Skipped(r) => Some(r),
        }
    }

    pub fn from_bool(ok: bool, reason: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail(reason())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub inputs: Vec<Entry>,
    pub verdict: Verdict,
    pub witness: Vec<Entry>,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub command: String,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

fn join_entries(entries: &[Entry], sep: &str) -> String {
    entries
        .iter()
        .map(|e| format!("{}={}", e.key, e.value))
        .collect::<Vec<_>>()
        .join(sep)
}

impl Report {
    pub fn has_failure(&self) -> bool {
        self.checks
            .iter()
            .any(|c| matches!(c.verdict, Verdict::Fail(_)))
    }

    pub fn render(&self, format: Format) -> Result<String, ReportError> {
        match format {
            Format::Table => Ok(self.to_table()),
            Format::Json => Ok(self.to_json()?),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_json(&self) -> Result<String, serde_json::Error> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self, ReportError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "mck {} :: {}", self.version, self.command);
        let name_w = self
            .checks
            .iter()
            .map(|c| c.name.chars().count())
            .max()
            .unwrap_or(4)
            .max(4);
        let _ = writeln!(
            out,
            "{:<name_w$}  {:<7}  {:>7}  INPUTS",
            "NAME", "VERDICT", "MILLIS"
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<name_w$}  {:<7}  {:>7}  {}",
                c.name,
                c.verdict.label(),
                c.millis,
                join_entries(&c.inputs, " ")
            );
            if let Some(r) = c.verdict.reason() {
                let _ = writeln!(out, "    reason: {r}");
            }
            let key_w = c
                .witness
                .iter()
                .map(|e| e.key.chars().count())
                .max()
                .unwrap_or(0);
            for e in &c.witness {
                let pad = key_w - e.key.chars().count();
                let _ = writeln!(out, "    {}{} : {}", e.key, " ".repeat(pad), e.value);
            }
        }
        let count = |label: &str| {
            self.checks
                .iter()
                .filter(|c| c.verdict.label() == label)
                .count()
        };
        let _ = writeln!(
            out,
            "{} pass, {} fail, {} skipped",
            count("pass"),
            count("fail"),
            count("skipped")
        );
        out
    }

    pub fn to_csv(&self) -> Result<String, ReportError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["name", "inputs", "verdict", "reason", "millis", "witness"])?;
        for c in &self.checks {
            w.write_record([
                c.name.as_str(),
                &join_entries(&c.inputs, ";"),
                c.verdict.label(),
                c.verdict.reason().unwrap_or(""),
                &c.millis.to_string(),
                &join_entries(&c.witness, ";"),
            ])?;
        }
        w.flush()?;
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report {
            version: "0.1.0".into(),
            command: "fano --n 5 recurrence".into(),
            checks: vec![
                Check {
                    name: "fano.recurrence".into(),
                    inputs: vec![Entry::new("n", 5)],
                    verdict: Verdict::Pass,
                    witness: vec![Entry::new("p_1", "2"), Entry::new("p_2", "-5/2")],
                    millis: 3,
                },
                Check {
                    name: "fano.socle".into(),
                    inputs: vec![Entry::new("n", 4)],
                    verdict: Verdict::Skipped("n = 4 is below the supported range".into()),
                    witness: vec![],
                    millis: 0,
                },
            ],
        }
    }

    #[test]
    fn json_round_trip_gives_identical_table() {
        let r = sample();
        let back = Report::from_json(&r.to_json().unwrap()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_table(), r.to_table());
    }

    #[test]
    fn verdict_encoding() {
        let v = serde_json::to_string(&Verdict::Skipped("x".into())).unwrap();
        assert_eq!(v, r#"{"status":"skipped","reason":"x"}"#);
        assert_eq!(
            serde_json::to_string(&Verdict::Pass).unwrap(),
            r#"{"status":"pass"}"#
        );
    }

    #[test]
    fn csv_has_one_row_per_check() {
        let s = sample().to_csv().unwrap();
        assert_eq!(s.lines().count(), 3);
        assert!(s.contains("p_1=2;p_2=-5/2"));
    }
}
