use std::collections::BTreeMap;

use finaut_core::table::Fingerprint;
use serde::Serialize;
use serde_json::Value;

use crate::caps::Caps;

/// Bumped whenever the report layout changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Compared, but the expectation is disputed and never fails a run.
    Informational,
    /// Not run: long-running row, cap, or filter.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub field: String,
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
    /// Table location the expectation comes from.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub location: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn compare(id: &str, field: &str, expected: Value, computed: Value) -> Check {
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Check { id: id.into(), field: field.into(), status, expected, computed, location: None, note: None }
    }

    pub fn skipped(id: &str, field: &str, note: &str) -> Check {
        Check {
            id: id.into(),
            field: field.into(),
            status: Status::Skipped,
            expected: Value::Null,
            computed: Value::Null,
            location: None,
            note: Some(note.into()),
        }
    }

    pub fn failed(id: &str, field: &str, expected: Value, note: String) -> Check {
        Check { id: id.into(), field: field.into(), status: Status::Fail, expected, computed: Value::Null, location: None, note: Some(note) }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub informational: usize,
    pub skipped: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FingerprintReport {
    pub subject: String,
    pub order: usize,
    pub ncl: usize,
    pub center_order: usize,
    pub order_histogram: BTreeMap<u32, u32>,
    pub derived_orders: Vec<usize>,
}

impl FingerprintReport {
    pub fn new(subject: &str, f: &Fingerprint) -> Self {
        FingerprintReport {
            subject: subject.into(),
            order: f.order,
            ncl: f.ncl,
            center_order: f.center_order,
            order_histogram: f.order_histogram.clone(),
            derived_orders: f.derived_orders.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identification {
    pub subject: String,
    pub label: Option<String>,
    pub by_isomorphism: bool,
}

/// One command's machine-readable result. Field order is fixed; maps are
/// sorted, so two runs differ only in `elapsed_ms`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub schema: u32,
    pub command: Vec<String>,
    pub inputs: BTreeMap<String, Value>,
    pub caps: Caps,
    pub fingerprints: Vec<FingerprintReport>,
    pub identifications: Vec<Identification>,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: &[String], caps: Caps) -> Report {
        Report {
            tool: "finaut".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            schema: SCHEMA_VERSION,
            command: command.to_vec(),
            inputs: BTreeMap::new(),
            caps,
            fingerprints: Vec::new(),
            identifications: Vec::new(),
            results: BTreeMap::new(),
            checks: Vec::new(),
            summary: Summary { ok: true, ..Summary::default() },
            elapsed_ms: 0,
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.into(), v.into());
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) {
        self.results.insert(key.into(), v.into());
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
        self.summarize();
    }

    pub fn summarize(&mut self) {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Informational => s.informational += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s.ok = s.fail == 0;
        self.summary = s;
    }

    pub fn ok(&self) -> bool {
        self.summary.ok
    }

    pub fn to_json(&self, pretty: bool) -> String {
        if pretty {
            serde_json::to_string_pretty(self).expect("report serializes")
        } else {
            serde_json::to_string(self).expect("report serializes")
        }
    }
}
