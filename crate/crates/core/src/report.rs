//! Verification reports: named assertions with pass/fail/skipped status,
//! counts, and homology tables.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::homology::HomologySummary;

/// Outcome of one assertion, or of a whole report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Skipped,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Skipped => "skipped",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub status: Status,
    /// Expected/found values, a failing witness, or the reason for skipping.
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub scenario: String,
    pub parameter: String,
    pub status: Status,
    pub assertions: Vec<Assertion>,
    pub counts: BTreeMap<String, u64>,
    pub homology: BTreeMap<String, HomologySummary>,
    /// Only filled in when timings are requested, to keep output byte-stable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
    #[serde(skip)]
    started: Option<Instant>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for VerificationReport {
    /// Compares everything except timing.
    fn eq(&self, other: &Self) -> bool {
        self.scenario == other.scenario
            && self.parameter == other.parameter
            && self.status == other.status
            && self.assertions == other.assertions
            && self.counts == other.counts
            && self.homology == other.homology
    }
}

impl VerificationReport {
    pub fn new(scenario: &str, parameter: impl Into<String>) -> Self {
        VerificationReport {
            scenario: scenario.to_string(),
            parameter: parameter.into(),
            status: Status::Pass,
            assertions: Vec::new(),
            counts: BTreeMap::new(),
            homology: BTreeMap::new(),
            wall_ms: None,
            started: Some(Instant::now()),
            elapsed: Duration::ZERO,
        }
    }

    fn push(&mut self, name: &str, status: Status, detail: String) {
        self.assertions.push(Assertion { name: name.to_string(), status, detail });
    }

    /// Records a boolean assertion; `detail` is kept either way.
    pub fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) -> bool {
        self.push(name, if ok { Status::Pass } else { Status::Fail }, detail.into());
        ok
    }

    /// Records `expected == found`, printing both.
    pub fn check_eq<T: PartialEq + fmt::Debug>(&mut self, name: &str, expected: T, found: T) -> bool {
        let ok = expected == found;
        let detail =
            if ok { format!("{found:?}") } else { format!("expected {expected:?}, found {found:?}") };
        self.check(name, ok, detail)
    }

    pub fn skip(&mut self, name: &str, reason: impl Into<String>) {
        self.push(name, Status::Skipped, reason.into());
    }

    pub fn count(&mut self, key: &str, value: impl TryInto<u64>) {
        self.counts.insert(key.to_string(), value.try_into().unwrap_or(u64::MAX));
    }

    pub fn record_homology(&mut self, key: &str, summary: HomologySummary) {
        self.homology.insert(key.to_string(), summary);
    }

    /// Folds another report's assertions in, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for a in other.assertions {
            self.push(&format!("{prefix}{}", a.name), a.status, a.detail);
        }
        for (k, v) in other.counts {
            self.counts.insert(format!("{prefix}{k}"), v);
        }
        for (k, v) in other.homology {
            self.homology.insert(format!("{prefix}{k}"), v);
        }
    }

    /// Aggregates statuses (any failure fails; otherwise any skip skips) and
    /// stops the clock.
    pub fn finish(mut self) -> Self {
        self.status = self.assertions.iter().map(|a| a.status).max().unwrap_or(Status::Skipped);
        if let Some(t) = self.started.take() {
            self.elapsed = t.elapsed();
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn assertion(&self, name: &str) -> Option<&Assertion> {
        self.assertions.iter().find(|a| a.name == name)
    }

    pub fn with_timing(mut self) -> Self {
        self.wall_ms = Some(self.elapsed.as_millis() as u64);
        self
    }

    /// Human-readable form.
    pub fn to_text(&self) -> String {
        let mut out = format!("scenario {} ({}): {}\n", self.scenario, self.parameter, self.status);
        for a in &self.assertions {
            out.push_str(&format!("  [{}] {}: {}\n", a.status, a.name, a.detail));
        }
        for (k, v) in &self.counts {
            out.push_str(&format!("  count {k} = {v}\n"));
        }
        for (k, h) in &self.homology {
            out.push_str(&format!("  homology {k}:\n"));
            for line in h.to_text().lines() {
                out.push_str(&format!("    {line}\n"));
            }
        }
        if let Some(ms) = self.wall_ms {
            out.push_str(&format!("  wall_ms = {ms}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregation() {
        let mut r = VerificationReport::new("demo", "n=1");
        r.check("a", true, "");
        assert_eq!(r.clone().finish().status, Status::Pass);
        r.skip("b", "budget");
        assert_eq!(r.clone().finish().status, Status::Skipped);
        r.check_eq("c", 1, 2);
        let r = r.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.assertion("c").unwrap().detail, "expected 1, found 2");
        assert_eq!(VerificationReport::new("empty", "").finish().status, Status::Skipped);
    }
}
