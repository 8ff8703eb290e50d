//! Check reports and their two renderings.
//!
//! A report is pure data derived from the inputs: named counts in a
//! sorted map, witness lines in a fixed order, and a verdict. Neither
//! rendering embeds timing or any other run-dependent value, so the same
//! inputs produce byte-identical output on every run; wall-clock time is
//! printed separately on stderr in text mode.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// The outcome of one check: a name, a verdict, supporting counts, and
/// witness lines (failure diagnostics, or certified data on success).
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub verdict: Verdict,
    pub counts: BTreeMap<String, u64>,
    pub witnesses: Vec<String>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            verdict: Verdict::Pass,
            counts: BTreeMap::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn count(mut self, key: &str, value: usize) -> Self {
        self.counts.insert(key.to_string(), value as u64);
        self
    }

    pub fn flag(self, key: &str, value: bool) -> Self {
        self.count(key, usize::from(value))
    }

    pub fn witness(mut self, line: impl Into<String>) -> Self {
        self.witnesses.push(line.into());
        self
    }

    pub fn witnesses(mut self, lines: impl IntoIterator<Item = String>) -> Self {
        self.witnesses.extend(lines);
        self
    }

    /// Marks the report failed and records the diagnostic.
    pub fn fail(mut self, witness: impl Into<String>) -> Self {
        self.verdict = Verdict::Fail;
        self.witnesses.push(witness.into());
        self
    }

    /// Folds a sub-verdict into this report: on failure, records the
    /// diagnostic prefixed with the sub-check name.
    pub fn require(self, name: &str, pass: bool, witness: Option<String>) -> Self {
        if pass {
            self
        } else {
            let detail = witness.unwrap_or_else(|| "no witness recorded".to_string());
            self.fail(format!("{name}: {detail}"))
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Serialize)]
struct Output<'a> {
    verdict: Verdict,
    reports: &'a [Report],
}

pub fn all_pass(reports: &[Report]) -> bool {
    reports.iter().all(Report::passed)
}

/// Renders reports as JSON with a fixed field order and sorted counts.
pub fn render_structured(reports: &[Report]) -> String {
    let verdict = if all_pass(reports) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut out =
        serde_json::to_string_pretty(&Output { verdict, reports }).expect("reports serialize");
    out.push('\n');
    out
}

/// Renders reports as an indented text listing.
pub fn render_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for report in reports {
        out.push_str(&format!(
            "check: {}\nverdict: {}\n",
            report.check,
            match report.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
            }
        ));
        if !report.counts.is_empty() {
            out.push_str("counts:\n");
            for (k, v) in &report.counts {
                out.push_str(&format!("  {k}: {v}\n"));
            }
        }
        if !report.witnesses.is_empty() {
            out.push_str("witnesses:\n");
            for w in &report.witnesses {
                out.push_str(&format!("  - {w}\n"));
            }
        }
        out.push('\n');
    }
    let verdict = if all_pass(reports) { "pass" } else { "fail" };
    out.push_str(&format!("overall: {verdict} ({} checks)\n", reports.len()));
    out
}
