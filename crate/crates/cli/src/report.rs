//! Machine-readable run reports.
//!
//! Everything except the `timing` block is a function of the input, so two
//! runs on the same input serialize identically once `timing` is removed.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{EXIT_CLAIM_FAILED, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    /// A computed quantity checked against an expected value.
    Claim,
    /// An exhibited word is not a codeword of the loaded code.
    RepresentationMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub kind: ClaimKind,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub result: Value,
    pub claims: Vec<Claim>,
    /// Interpretation choices that affected this run.
    pub notes: Vec<String>,
    pub timing: Timing,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Report {
    pub fn new(command: impl Into<String>, input: &[u8], result: Value) -> Report {
        Report {
            command: command.into(),
            input_digest: digest(input),
            result,
            claims: Vec::new(),
            notes: Vec::new(),
            timing: Timing { elapsed_ms: 0 },
        }
    }

    pub fn claim(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.push(name, ClaimKind::Claim, passed, detail.into());
        passed
    }

    pub fn mismatch(&mut self, name: &str, detail: impl Into<String>) {
        self.push(name, ClaimKind::RepresentationMismatch, false, detail.into());
    }

    fn push(&mut self, name: &str, kind: ClaimKind, passed: bool, detail: String) {
        self.claims.push(Claim {
            name: name.to_string(),
            kind,
            passed,
            detail,
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn set_elapsed(&mut self, elapsed: Duration) {
        self.timing.elapsed_ms = elapsed.as_millis();
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn has_mismatch(&self) -> bool {
        self.claims.iter().any(|c| c.kind == ClaimKind::RepresentationMismatch)
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            EXIT_OK
        } else {
            EXIT_CLAIM_FAILED
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The report as JSON with the `timing` block removed.
    pub fn stable_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        if let Value::Object(map) = &mut v {
            map.remove("timing");
        }
        serde_json::to_string_pretty(&v).expect("reports serialize")
    }

    pub fn summary(&self) -> String {
        let mut s = format!("{}  [{}]\n", self.command, &self.input_digest[..12]);
        for c in &self.claims {
            let tag = match (c.passed, c.kind) {
                (true, _) => "ok",
                (false, ClaimKind::Claim) => "FAILED",
                (false, ClaimKind::RepresentationMismatch) => "MISMATCH",
            };
            let _ = writeln!(s, "  {tag:<8} {}: {}", c.name, c.detail);
        }
        for n in &self.notes {
            let _ = writeln!(s, "  note     {n}");
        }
        let _ = write!(s, "  {} ms", self.timing.elapsed_ms);
        s
    }
}
