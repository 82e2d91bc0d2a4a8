//! Pass/fail records shared by the verification suites.

use serde::Serialize;
use serde_json::Value;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub millis: u128,
    /// Counterexample or certificate data.
    #[serde(skip_serializing_if = "Value::is_null")]
    pub payload: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into(), millis: 0, payload: Value::Null }
    }
    pub fn skip(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { status: Status::Skip, ..Check::new(name, true, detail) }
    }
    pub fn with_payload(mut self, payload: Value) -> Self {
        self.payload = payload;
        self
    }
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// Runs `f` and records its wall time. Errors become failures.
    pub fn timed(name: impl Into<String>, f: impl FnOnce() -> crate::Result<(bool, String)>) -> Self {
        let name = name.into();
        let start = Instant::now();
        let mut c = match f() {
            Ok((ok, detail)) => Check::new(name, ok, detail),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        };
        c.millis = start.elapsed().as_millis();
        c
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }
    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        self.checks.extend(cs);
    }
    /// A suite passes iff no check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            out.push_str(&format!("{tag}  {}  {} ({} ms)\n", c.name, c.detail, c.millis));
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed, {} skipped\n",
            self.suite,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        ));
        out
    }
}
