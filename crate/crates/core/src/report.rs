use serde::{Deserialize, Serialize};

/// Verdict for one named identity such as `c2` or `r7`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
}

/// Ordered list of identity verdicts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checks: Vec<Verdict>,
    /// Identities outside the truncation bounds, listed by name.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub not_checked: Vec<String>,
}

impl CheckReport {
    pub fn push(&mut self, name: impl Into<String>, holds: bool) {
        self.checks.push(Verdict { name: name.into(), holds });
    }

    pub fn skip(&mut self, name: impl Into<String>) {
        self.not_checked.push(name.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|v| v.holds)
    }

    pub fn violated(&self) -> Vec<&str> {
        self.checks.iter().filter(|v| !v.holds).map(|v| v.name.as_str()).collect()
    }

    pub fn holds(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|v| v.name == name).map(|v| v.holds)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
        self.not_checked.extend(other.not_checked);
    }
}
