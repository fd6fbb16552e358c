//! Verification reports: an ordered list of named checks with a status and,
//! for failures and recorded discrepancies, a witness polynomial.

use std::fmt;

use serde_json::{json, Value};

use crate::io::poly_to_value;
use crate::poly::CliffPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    DiscrepancyRecorded,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DiscrepancyRecorded => "discrepancy-recorded",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub id: String,
    pub reference: String,
    pub status: Status,
    pub witness: Option<CliffPoly>,
    pub note: Option<String>,
}

impl Case {
    pub fn pass(id: impl Into<String>, reference: impl Into<String>) -> Self {
        Case { id: id.into(), reference: reference.into(), status: Status::Pass, witness: None, note: None }
    }

    /// A failure always names the polynomial that exhibits it.
    pub fn fail(id: impl Into<String>, reference: impl Into<String>, witness: CliffPoly) -> Self {
        Case {
            id: id.into(),
            reference: reference.into(),
            status: Status::Fail,
            witness: Some(witness),
            note: None,
        }
    }

    pub fn discrepancy(id: impl Into<String>, reference: impl Into<String>, witness: CliffPoly) -> Self {
        Case {
            id: id.into(),
            reference: reference.into(),
            status: Status::DiscrepancyRecorded,
            witness: Some(witness),
            note: None,
        }
    }

    pub fn skipped(id: impl Into<String>, reference: impl Into<String>, reason: impl Into<String>) -> Self {
        Case {
            id: id.into(),
            reference: reference.into(),
            status: Status::Skipped,
            witness: None,
            note: Some(reason.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn to_value(&self) -> Value {
        let mut v = json!({
            "id": self.id,
            "reference": self.reference,
            "status": self.status.as_str(),
        });
        if let Some(w) = &self.witness {
            v["witness"] = poly_to_value(w);
        }
        if let Some(n) = &self.note {
            v["note"] = json!(n);
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub cases: Vec<Case>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, seed: u64) -> Self {
        VerificationReport { suite: suite.into(), seed, cases: Vec::new() }
    }

    pub fn push(&mut self, case: Case) {
        self.cases.push(case);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.cases.extend(other.cases);
    }

    pub fn count(&self, status: Status) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    /// No case failed; recorded discrepancies and skips do not count.
    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn to_value(&self) -> Value {
        json!({
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases.iter().map(Case::to_value).collect::<Vec<_>>(),
            "summary": {
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "discrepancy-recorded": self.count(Status::DiscrepancyRecorded),
                "skipped": self.count(Status::Skipped),
            },
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("serializable")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (seed {})", self.suite, self.seed)?;
        for c in &self.cases {
            write!(f, "  [{}] {} ({})", c.status, c.id, c.reference)?;
            if let Some(n) = &c.note {
                write!(f, ": {n}")?;
            }
            writeln!(f)?;
            if let Some(w) = &c.witness {
                writeln!(f, "      witness: {w}")?;
            }
        }
        write!(
            f,
            "{} pass, {} fail, {} discrepancy-recorded, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::DiscrepancyRecorded),
            self.count(Status::Skipped)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_strings_and_verdict() {
        let mut r = VerificationReport::new("demo", 7);
        r.push(Case::pass("a", "ref"));
        r.push(Case::discrepancy("b", "ref", CliffPoly::one(1)));
        r.push(Case::skipped("c", "ref", "why"));
        assert!(r.passed());
        r.push(Case::fail("d", "ref", CliffPoly::var(1, 1)));
        assert!(!r.passed());
        let v = r.to_value();
        assert_eq!(v["cases"][1]["status"], "discrepancy-recorded");
        assert_eq!(v["cases"][3]["witness"]["m"], 1);
        assert_eq!(v["summary"]["fail"], 1);
        assert_eq!(r.to_json(), r.clone().to_json());
    }
}
