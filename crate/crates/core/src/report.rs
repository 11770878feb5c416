//! Pass/fail reports produced by the checkers.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, id: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { id: id.into(), pass, detail: detail.into() });
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.push(id, true, "");
    }

    pub fn fail(&mut self, id: impl Into<String>, witness: impl Into<String>) {
        self.push(id, false, witness);
    }

    pub fn note(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.push(id, true, detail);
    }

    pub fn merge(&mut self, other: Report) {
        for mut c in other.checks {
            c.id = format!("{}/{}", other.suite, c.id);
            self.checks.push(c);
        }
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let checks: Vec<_> = self
            .checks
            .iter()
            .map(|c| serde_json::json!({"id": c.id, "status": if c.pass {"pass"} else {"fail"}, "detail": c.detail}))
            .collect();
        serde_json::json!({"suite": self.suite, "checks": checks, "ok": self.ok()})
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}/{}", if c.pass { "PASS" } else { "FAIL" }, self.suite, c.id)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        write!(f, "{}: {}", self.suite, if self.ok() { "ok" } else { "FAILED" })
    }
}
