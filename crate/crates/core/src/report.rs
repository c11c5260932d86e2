//! Verification reports with a fixed JSON schema.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<u32>,
}

/// Computed value attached to a report, such as a table entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Datum {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub target: String,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub data: Vec<Datum>,
    #[serde(default)]
    pub elapsed_ms: u64,
    pub version: String,
}

impl Report {
    pub fn new(suite: &str, target: &str) -> Report {
        Report {
            schema: SCHEMA_VERSION,
            suite: suite.to_string(),
            target: target.to_string(),
            checks: Vec::new(),
            data: Vec::new(),
            elapsed_ms: 0,
            version: concat!("hopfkit ", env!("CARGO_PKG_VERSION")).to_string(),
        }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, Status::Pass, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, Status::Fail, Some(witness.into()));
    }

    pub fn skip(&mut self, name: impl Into<String>, why: impl Into<String>) {
        self.push(name, Status::Skipped, Some(why.into()));
    }

    /// Pass when `witness` is `None`, otherwise fail with it.
    pub fn record(&mut self, name: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass(name)
        } else {
            self.fail(name, witness())
        }
    }

    fn push(&mut self, name: impl Into<String>, status: Status, witness: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            status,
            witness,
            degree_bound: None,
        });
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.data.push(Datum { key: key.into(), value: value.into() });
    }

    /// Attach a truncation degree to the most recent check.
    pub fn bounded(&mut self, d: u32) -> &mut Self {
        if let Some(c) = self.checks.last_mut() {
            c.degree_bound = Some(d);
        }
        self
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Report> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn emit(&self, format: &str) -> Result<String> {
        match format {
            "json" => Ok(self.to_json()),
            "text" => Ok(self.to_string()),
            other => Err(Error::InvalidArgument(format!("unknown format `{other}`"))),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} on {}", self.suite, self.target)?;
        for d in &self.data {
            writeln!(f, "  {} = {}", d.key, d.value)?;
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            write!(f, "  [{tag}] {}", c.name)?;
            if let Some(d) = c.degree_bound {
                write!(f, " (verified up to degree {d})")?;
            }
            if let Some(w) = &c.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "{} passed, {} failed, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("hopf-axioms", "SLq2");
        r.pass("coassociativity");
        r.fail("antipode law on b", "-q*b + b");
        r.bounded(3);
        r.note("rank", "4");
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(!r.passed());
        assert!(r.emit("text").unwrap().contains("-q*b + b"));
        assert!(r.emit("yaml").is_err());
    }
}
