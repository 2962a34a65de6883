//! Pass/fail reports produced by the verification suites.

use std::fmt;

/// One checked item.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// An ordered list of checked items.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.entries.push(Entry { name: name.into(), passed, detail: detail.into() });
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.entries.len() - self.passed()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|e| serde_json::json!({"name": e.name, "passed": e.passed, "detail": e.detail}))
                .collect(),
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let tag = if e.passed { "PASS" } else { "FAIL" };
            if e.detail.is_empty() {
                writeln!(f, "{tag} {}", e.name)?;
            } else {
                writeln!(f, "{tag} {} ({})", e.name, e.detail)?;
            }
        }
        Ok(())
    }
}
