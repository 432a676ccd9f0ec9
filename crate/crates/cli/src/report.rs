//! Machine-readable verification reports.

use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Option<Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>, witness: Option<Value>) -> Self {
        Check { name: name.into(), status: Status::Pass, witness }
    }

    /// A failing check always carries a witness.
    pub fn fail(name: impl Into<String>, witness: Value) -> Self {
        Check { name: name.into(), status: Status::Fail, witness: Some(witness) }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: Value) -> Self {
        if ok {
            Self::pass(name, Some(witness))
        } else {
            Self::fail(name, witness)
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub inputs: Map<String, Value>,
    pub checks: Vec<Check>,
    pub seed: u64,
    pub timing_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: &str, inputs: Map<String, Value>, seed: u64) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            inputs,
            checks: Vec::new(),
            seed,
            timing_ms: 0,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {} {}\n", self.suite, c.name));
        }
        out
    }
}
