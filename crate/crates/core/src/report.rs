//! Check outcomes shared by every verifier.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::element::{Element, TensorElement};
use crate::render::{render_element, render_tensor};
use crate::scalar::TruncationPolicy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A documented discrepancy with the printed formula; never a failure.
    Flagged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        })
    }
}

/// Difference between two sides of an identity at given truncation orders.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub value: TensorElement,
    pub orders: TruncationPolicy,
}

impl Residual {
    pub fn new(value: TensorElement, orders: &TruncationPolicy) -> Self {
        Residual { value: value.truncate(orders), orders: orders.clone() }
    }

    pub fn of_element(value: Element, orders: &TruncationPolicy) -> Self {
        Residual::new(TensorElement::from_element(value), orders)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn render(&self) -> String {
        if self.value.rank() == 1 {
            render_element(&self.value.to_element())
        } else {
            render_tensor(&self.value)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub id: String,
    pub status: Status,
    /// Text rendering of the residual; empty when it vanishes.
    pub residual: String,
    pub orders: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
    pub millis: u64,
}

impl Report {
    pub fn new(id: impl Into<String>, status: Status, orders: &TruncationPolicy) -> Self {
        Report {
            id: id.into(),
            status,
            residual: String::new(),
            orders: orders.describe(),
            note: String::new(),
            millis: 0,
        }
    }

    /// Pass iff the residual vanishes.
    pub fn from_residual(id: impl Into<String>, r: &Residual) -> Self {
        let status = if r.is_zero() { Status::Pass } else { Status::Fail };
        let mut rep = Report::new(id, status, &r.orders);
        if !r.is_zero() {
            rep.residual = r.render();
        }
        rep
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn with_residual(mut self, residual: impl Into<String>) -> Self {
        self.residual = residual.into();
        self
    }

    /// Downgrade a failure to `flagged` (documented discrepancy).
    pub fn flag(mut self, note: impl Into<String>) -> Self {
        self.status = Status::Flagged;
        self.note = note.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<7} {}", self.status, self.id)?;
        if !self.note.is_empty() {
            write!(f, "  [{}]", self.note)?;
        }
        if !self.residual.is_empty() {
            write!(f, "\n        residual: {}", self.residual)?;
        }
        Ok(())
    }
}

/// Combine reports into one: fail dominates, then flagged.
pub fn combine(id: impl Into<String>, parts: &[Report], orders: &TruncationPolicy) -> Report {
    let status = parts.iter().map(|r| r.status).max().unwrap_or(Status::Pass);
    let mut out = Report::new(id, status, orders);
    let bad: Vec<String> = parts
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| format!("{}: {}", r.id, r.residual))
        .collect();
    out.residual = bad.join("; ");
    out
}

pub const REPORT_SCHEMA: &str = "twistkit.report/1";

/// Counts of pass, fail and flagged entries.
pub fn summary(reports: &[Report]) -> BTreeMap<String, usize> {
    let mut out: BTreeMap<String, usize> = ["pass", "fail", "flagged"].iter().map(|s| (s.to_string(), 0)).collect();
    for r in reports {
        *out.entry(r.status.to_string()).or_default() += 1;
    }
    out
}

/// Versioned JSON document for a list of reports.
pub fn structured_reports(reports: &[Report]) -> serde_json::Value {
    serde_json::json!({
        "schema": REPORT_SCHEMA,
        "summary": summary(reports),
        "reports": reports,
    })
}

/// One line per report followed by the counts.
pub fn text_reports(reports: &[Report]) -> String {
    let mut out: String = reports.iter().map(|r| format!("{}\n", r)).collect();
    let s = summary(reports);
    out.push_str(&format!("{} pass, {} fail, {} flagged\n", s["pass"], s["fail"], s["flagged"]));
    out
}
