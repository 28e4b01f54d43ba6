//! Pass/fail bookkeeping shared by every identity suite.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// First failing input of a suite, rendered in the text grammars.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: String,
    pub inputs: Vec<String>,
    pub defect: String,
}

impl Witness {
    pub fn new(check: impl Into<String>, inputs: Vec<String>, defect: impl ToString) -> Self {
        Self {
            check: check.into(),
            inputs,
            defect: defect.to_string(),
        }
    }
}

/// Outcome of one check cell: `Ok` or the witness of its failure.
pub type Cell = Result<(), Witness>;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub attempted: u64,
    pub passed: u64,
    pub failures: u64,
    pub witness: Option<Witness>,
    /// Findings that do not count as failures (e.g. a displayed formula that
    /// was replaced by its corrected form).
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            attempted: 0,
            passed: 0,
            failures: 0,
            witness: None,
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn record(&mut self, cell: Cell) {
        self.attempted += 1;
        match cell {
            Ok(()) => self.passed += 1,
            Err(w) => {
                self.failures += 1;
                if self.witness.is_none() {
                    self.witness = Some(w);
                }
            }
        }
    }

    pub fn record_all(&mut self, cells: impl IntoIterator<Item = Cell>) {
        for c in cells {
            self.record(c);
        }
    }

    /// Records a boolean check, building the witness lazily.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.record(if ok { Ok(()) } else { Err(witness()) });
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Folds another result in, keeping the earliest witness.
    pub fn absorb(&mut self, other: SuiteResult) {
        self.attempted += other.attempted;
        self.passed += other.passed;
        self.failures += other.failures;
        if self.witness.is_none() {
            self.witness = other.witness;
        }
        self.notes.extend(other.notes);
        self.elapsed += other.elapsed;
    }

    pub fn ok(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub m: usize,
    pub n: usize,
    pub degree: u8,
    pub suites: Vec<String>,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub config: ConfigEcho,
    pub suites: Vec<SuiteResult>,
    /// Resolved conventions and interpreted notation, keyed by topic.
    pub conventions: BTreeMap<String, String>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(config: ConfigEcho) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            config,
            suites: Vec::new(),
            conventions: BTreeMap::new(),
            pass: true,
        }
    }

    pub fn push(&mut self, suite: SuiteResult) {
        self.pass &= suite.ok();
        self.suites.push(suite);
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }

    /// JSON text; optionally with per-suite wall times, which break
    /// byte-for-byte reproducibility and are therefore opt-in.
    pub fn to_json(&self, timings: bool) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if timings {
            for (s, js) in self.suites.iter().zip(v["suites"].as_array_mut().expect("array")) {
                js["wall_ms"] = serde_json::json!(s.elapsed.as_millis() as u64);
            }
        }
        let mut out = serde_json::to_string_pretty(&v).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_markdown(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        let _ = writeln!(out, "# Verification report\n");
        let _ = writeln!(
            out,
            "shape ({}|{}), degree {}, seed {}, overall: **{}**\n",
            c.m,
            c.n,
            c.degree,
            c.seed,
            if self.pass { "PASS" } else { "FAIL" }
        );
        let _ = writeln!(out, "| suite | passed | attempted | wall ms |");
        let _ = writeln!(out, "|---|---:|---:|---:|");
        for s in &self.suites {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} |",
                s.name,
                s.passed,
                s.attempted,
                s.elapsed.as_millis()
            );
        }
        for s in &self.suites {
            if let Some(w) = &s.witness {
                let _ = writeln!(out, "\n## {} first failure\n", s.name);
                let _ = writeln!(out, "- check: {}", w.check);
                let _ = writeln!(out, "- inputs: {}", w.inputs.join(", "));
                let _ = writeln!(out, "- defect: `{}`", w.defect);
            }
            if !s.notes.is_empty() {
                let _ = writeln!(out, "\n## {} notes\n", s.name);
                for n in &s.notes {
                    let _ = writeln!(out, "- {n}");
                }
            }
        }
        if !self.conventions.is_empty() {
            let _ = writeln!(out, "\n## Conventions\n");
            for (k, v) in &self.conventions {
                let _ = writeln!(out, "- **{k}**: {v}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_keeps_first_witness() {
        let mut s = SuiteResult::new("x");
        s.record(Ok(()));
        s.record(Err(Witness::new("a", vec![], "1")));
        s.record(Err(Witness::new("b", vec![], "2")));
        assert_eq!((s.attempted, s.passed, s.failures), (3, 1, 2));
        assert_eq!(s.witness.unwrap().check, "a");
    }

    #[test]
    fn json_is_deterministic_without_timings() {
        let echo = ConfigEcho {
            m: 2,
            n: 1,
            degree: 3,
            suites: vec!["baxter".into()],
            seed: 7,
        };
        let mut r = VerificationReport::new(echo);
        let mut s = SuiteResult::new("baxter");
        s.elapsed = Duration::from_millis(12);
        s.record(Ok(()));
        r.push(s);
        let a = r.to_json(false);
        r.suites[0].elapsed = Duration::from_millis(99);
        assert_eq!(a, r.to_json(false));
        assert!(r.to_json(true).contains("wall_ms"));
        assert!(a.contains("\"schema_version\": 1"));
    }
}
