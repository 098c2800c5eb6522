//! Machine-readable verification reports.
//!
//! Every number is rendered as an exact string (a reduced fraction or a
//! residue). Reports are deterministic for a fixed configuration apart from
//! the `timestamp` field.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "albert-kit/1";

/// One named check with the identity it exercises.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_anchor: String,
    pub trials: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl Check {
    /// A check passes iff no witness was found.
    pub fn new(name: &str, anchor: &str, trials: usize, witness: Option<Value>) -> Self {
        Self {
            name: name.to_string(),
            paper_anchor: anchor.to_string(),
            trials,
            passed: witness.is_none(),
            witness,
            detail: None,
        }
    }

    /// A check with an explicit outcome; failures without a witness get the
    /// detail payload as their witness so that a FAIL is never bare.
    pub fn outcome(name: &str, anchor: &str, trials: usize, passed: bool, detail: Value) -> Self {
        Self {
            name: name.to_string(),
            paper_anchor: anchor.to_string(),
            trials,
            passed,
            witness: (!passed).then(|| detail.clone()),
            detail: Some(detail),
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
    pub config: Value,
    pub timestamp: String,
}

impl Report {
    pub fn new(command: &str, config: Value, checks: Vec<Check>) -> Self {
        let verdict = if checks.iter().all(|c| c.passed) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        let timestamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs().to_string())
            .unwrap_or_default();
        Self {
            schema: SCHEMA,
            command: command.to_string(),
            verdict,
            checks,
            config,
            timestamp,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
