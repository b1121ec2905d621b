use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};

/// `(id, json)` for every embedded expectation file.
pub const TABLES: [(&str, &str); 10] = [
    ("table1", include_str!("../data/table1.json")),
    ("table2a", include_str!("../data/table2a.json")),
    ("table3a", include_str!("../data/table3a.json")),
    ("table8", include_str!("../data/table8.json")),
    ("table9", include_str!("../data/table9.json")),
    ("table10", include_str!("../data/table10.json")),
    ("tableA1", include_str!("../data/tableA1.json")),
    ("tableA2", include_str!("../data/tableA2.json")),
    ("tableA4", include_str!("../data/tableA4.json")),
    ("table11a", include_str!("../data/table11a.json")),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Build a group from `spec` and compare it and its automorphism group.
    Aut,
    /// Sylow 2-subgroup of GL(2,p): order, class structure, subgroups.
    Sylow,
    /// A congruence solver at `p`.
    Solver,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table {
    pub table: String,
    pub version: u32,
    pub title: String,
    pub kind: Kind,
    pub rows: Vec<Row>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Row {
    pub key: String,
    pub location: String,
    #[serde(default)]
    pub spec: Option<String>,
    #[serde(default)]
    pub p: Option<u32>,
    #[serde(default)]
    pub n: Option<u32>,
    #[serde(default)]
    pub solver: Option<String>,
    /// Every field of the row is disputed.
    #[serde(default)]
    pub informational: bool,
    /// Disputed fields, as `field` or `field.key`.
    #[serde(default)]
    pub informational_fields: Vec<String>,
    #[serde(default)]
    pub long_running: bool,
    #[serde(default)]
    pub note: Option<String>,
    pub expect: Expect,
}

impl Row {
    pub fn is_informational(&self, field: &str) -> bool {
        self.informational || self.informational_fields.iter().any(|f| f == field)
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expect {
    pub order: Option<u128>,
    pub ncl: Option<usize>,
    pub center: Option<usize>,
    pub aut_order: Option<u128>,
    pub aut_ncl: Option<usize>,
    pub aut_center: Option<usize>,
    pub aut_histogram: Option<BTreeMap<u32, u32>>,
    pub complete: Option<bool>,
    pub label: Option<String>,
    /// Element order -> class profile such as `(1^2,2^5,8)`.
    pub classes: Option<BTreeMap<u32, String>>,
    pub subgroups16: Option<Vec<String>>,
    pub subgroups32: Option<Vec<String>>,
    pub solutions: Option<Vec<Vec<i64>>>,
    pub count: Option<usize>,
    pub contains: Option<Vec<Vec<i64>>>,
}

impl Expect {
    /// Whether any field needs a table of the automorphism group.
    pub fn needs_aut_table(&self) -> bool {
        self.aut_ncl.is_some() || self.aut_center.is_some() || self.aut_histogram.is_some() || self.label.is_some()
    }
}

pub fn table_ids() -> Vec<&'static str> {
    TABLES.iter().map(|(id, _)| *id).collect()
}

/// Loads a table by id; ids are matched case-insensitively.
pub fn load(id: &str) -> Result<Table> {
    let (name, text) =
        TABLES.iter().find(|(t, _)| t.eq_ignore_ascii_case(id)).ok_or_else(|| Error::UnknownTable(id.into()))?;
    serde_json::from_str(text).map_err(|source| Error::Data { table: (*name).into(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_table_loads_and_names_itself() {
        for id in table_ids() {
            let t = load(id).unwrap();
            assert_eq!(t.table, id);
            assert!(!t.rows.is_empty());
            let mut keys: Vec<&str> = t.rows.iter().map(|r| r.key.as_str()).collect();
            keys.sort_unstable();
            keys.dedup();
            assert_eq!(keys.len(), t.rows.len(), "{} has duplicate row keys", id);
        }
    }

    #[test]
    fn every_location_names_its_table() {
        for id in table_ids() {
            let t = load(id).unwrap();
            let prefix = format!("Table {}", &id[5..]);
            for r in &t.rows {
                assert!(r.location.starts_with(&prefix), "{}: {}", id, r.location);
            }
        }
    }

    #[test]
    fn unknown_table() {
        assert!(matches!(load("table99"), Err(Error::UnknownTable(_))));
        assert_eq!(load("TABLE1").unwrap().table, "table1");
    }
}
