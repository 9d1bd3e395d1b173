//! Shared report types: verification output is a list of named checks, each
//! either recomputed here or cited to an external result, never silently mixed.

use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Verified by exact computation in this run.
    Recomputed,
    /// Assumed from the literature; carried with its citation string.
    ExternalAxiom { citation: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub statement: String,
    pub passed: bool,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<String>,
}

impl CheckItem {
    pub fn checked(name: &str, statement: impl Into<String>, passed: bool) -> CheckItem {
        CheckItem {
            name: name.into(),
            statement: statement.into(),
            passed,
            provenance: Provenance::Recomputed,
            details: None,
        }
    }

    pub fn axiom(name: &str, statement: impl Into<String>, citation: &str) -> CheckItem {
        CheckItem {
            name: name.into(),
            statement: statement.into(),
            passed: true,
            provenance: Provenance::ExternalAxiom { citation: citation.into() },
            details: None,
        }
    }

    pub fn with_details(mut self, details: impl Into<String>) -> CheckItem {
        self.details = Some(details.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub title: String,
    pub items: Vec<CheckItem>,
    pub conclusion: Option<String>,
}

impl CheckReport {
    pub fn new(title: impl Into<String>) -> CheckReport {
        CheckReport { title: title.into(), items: Vec::new(), conclusion: None }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn conclude(&mut self, text: impl Into<String>) {
        self.conclusion = Some(text.into());
    }

    /// True when every recomputed item passed (axioms are assumptions, but a
    /// failed axiom entry cannot exist by construction).
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn render_md(&self) -> String {
        let mut out = format!("## {}\n\n", self.title);
        out.push_str("| check | status | provenance | statement |\n");
        out.push_str("|---|---|---|---|\n");
        for item in &self.items {
            let status = if item.passed { "pass" } else { "FAIL" };
            let prov = match &item.provenance {
                Provenance::Recomputed => "recomputed".to_string(),
                Provenance::ExternalAxiom { citation } => format!("AXIOM [{citation}]"),
            };
            let mut stmt = item.statement.clone();
            if let Some(d) = &item.details {
                stmt.push_str(&format!(" ({d})"));
            }
            out.push_str(&format!("| {} | {} | {} | {} |\n", item.name, status, prov, stmt));
        }
        if let Some(c) = &self.conclusion {
            out.push_str(&format!("\nconclusion: {c}\n"));
        }
        out
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_md())
    }
}
