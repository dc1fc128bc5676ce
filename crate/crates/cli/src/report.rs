use std::collections::BTreeMap;

use dendri_core::cohomology::CohomologyTable;
use dendri_core::io::Document;
use dendri_core::{CheckReport, Verdict};
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Rank of a linear map between cochain spaces of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapRow {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Violation,
}

/// Machine-readable outcome of one command; identical inputs and seed give identical bytes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 of each input file, in argument order.
    pub inputs: Vec<String>,
    pub seed: u64,
    pub status: Status,
    pub violated: Vec<String>,
    pub checks: Vec<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub not_checked: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub tables: BTreeMap<String, CohomologyTable>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, Vec<MapRow>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Document>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub written: Option<String>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        RunReport {
            command: command.into(),
            inputs: Vec::new(),
            seed,
            status: Status::Pass,
            violated: Vec::new(),
            checks: Vec::new(),
            not_checked: Vec::new(),
            tables: BTreeMap::new(),
            maps: BTreeMap::new(),
            notes: Vec::new(),
            output: None,
            written: None,
        }
    }

    pub fn add_input(&mut self, bytes: &[u8]) {
        self.inputs.push(format!("{:x}", Sha256::digest(bytes)));
    }

    pub fn push(&mut self, name: impl Into<String>, holds: bool) {
        self.checks.push(Verdict { name: name.into(), holds });
    }

    pub fn absorb(&mut self, report: CheckReport) {
        self.checks.extend(report.checks);
        self.not_checked.extend(report.not_checked);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Fills `status` and `violated` from the verdicts.
    pub fn finish(&mut self) {
        self.violated = self.checks.iter().filter(|v| !v.holds).map(|v| v.name.clone()).collect();
        self.status = if self.violated.is_empty() { Status::Pass } else { Status::Violation };
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|v| v.holds)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}
