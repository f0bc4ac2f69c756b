//! Structured verification reports, rendered as JSON or plain text.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    /// Process exit status: 0 pass, 1 refutation, 2 inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }

    /// Combine two verdicts: any failure wins, then inconclusive.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Homological bound `N` and internal-degree bound `D` a verdict is valid for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub hmax: usize,
    pub dmax: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), verdict: Verdict::Pass, bounds: None, checks: Vec::new(), data: BTreeMap::new() }
    }

    pub fn with_bounds(mut self, hmax: usize, dmax: usize) -> Self {
        self.bounds = Some(Bounds { hmax, dmax });
        self
    }

    /// Record a check; a failed check turns the verdict into `Fail`.
    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        if !passed {
            self.verdict = Verdict::Fail;
        }
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
        passed
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.data.insert(key.to_string(), serde_json::to_value(value).expect("serializable report data"));
    }

    pub fn mark_inconclusive(&mut self) {
        if self.verdict == Verdict::Pass {
            self.verdict = Verdict::Inconclusive;
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// Absorb a sub-report as a single named check.
    pub fn absorb(&mut self, sub: &Report) {
        let detail = match sub.first_failure() {
            Some(c) => format!("{}: {}", c.name, c.detail),
            None => String::new(),
        };
        let passed = sub.verdict != Verdict::Fail;
        self.check(sub.name.clone(), passed, detail);
        if sub.verdict == Verdict::Inconclusive {
            self.mark_inconclusive();
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.verdict)?;
        match self.bounds {
            Some(b) if b.hmax == 0 => write!(f, " (up to internal degree {})", b.dmax)?,
            Some(b) => write!(f, " (up to homological degree {}, internal degree {})", b.hmax, b.dmax)?,
            None => {}
        }
        writeln!(f)?;
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "  [{mark}] {}", c.name)?;
            } else {
                writeln!(f, "  [{mark}] {} -- {}", c.name, c.detail)?;
            }
        }
        for (k, v) in &self.data {
            writeln!(f, "  {k}: {v}")?;
        }
        Ok(())
    }
}
