//! Pass/fail reporting shared by all verifiers. Reports list every failing
//! index with both sides' values; an empty failure list is a pass.

use serde::Serialize;

/// Valuation of an element of a discrete valuation ring; `Infinite` for 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Val {
    Finite(i64),
    Infinite,
}

impl Val {
    pub fn finite(self) -> Option<i64> {
        match self {
            Val::Finite(v) => Some(v),
            Val::Infinite => None,
        }
    }

    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Val::Finite(v) => v >= bound,
            Val::Infinite => true,
        }
    }
}

impl std::fmt::Display for Val {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Val::Finite(v) => write!(f, "{v}"),
            Val::Infinite => write!(f, "inf"),
        }
    }
}

/// Per-coefficient valuation check against a theorem's lower bound.
#[derive(Clone, Debug, Serialize)]
pub struct ValuationReport {
    pub j: usize,
    pub v: Val,
    pub bound: i64,
    pub exact: bool,
    pub passed: bool,
}

impl ValuationReport {
    pub fn new(j: usize, v: Val, bound: i64) -> Self {
        ValuationReport {
            j,
            v,
            bound,
            exact: v == Val::Finite(bound),
            passed: v.at_least(bound),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckLine>,
    /// Set for reports whose subject is an open conjecture: verdicts are
    /// observations, not theorems.
    pub experimental: bool,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: vec![],
            experimental: false,
        }
    }

    pub fn experimental(suite: impl Into<String>) -> Self {
        let mut r = Self::new(suite);
        r.experimental = true;
        r
    }

    pub fn push(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckLine {
            label: label.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn push_valuation(&mut self, label: impl Into<String>, vr: &ValuationReport) {
        self.push(
            label,
            vr.passed,
            format!("j={} v={} bound={} exact={}", vr.j, vr.v, vr.bound, vr.exact),
        );
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckLine> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}
