//! Verification reports and their JSON form (`"schema": "socle-lab/1"`).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: &str = "socle-lab/1";

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Stated in the literature the family comes from.
    Published,
    /// Worked out by hand or by an independent oracle.
    Derived,
    /// Immediate from the definitions.
    Elementary,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDescriptor {
    pub family: String,
    pub params: BTreeMap<String, Value>,
    pub ring: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Row {
    pub claim: String,
    pub citation: String,
    pub provenance: Provenance,
    pub expected: Value,
    pub computed: Option<Value>,
    /// `None` for flagged rows, which carry several candidate values.
    pub pass: Option<bool>,
    pub flagged: bool,
    pub note: Option<String>,
    pub error: Option<String>,
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub schema: String,
    pub tool_version: String,
    pub instance: InstanceDescriptor,
    pub field_characteristic: u32,
    pub seed: u64,
    pub samples: usize,
    pub rows: Vec<Row>,
}

impl VerificationReport {
    /// No row failed or errored. Flagged rows do not count.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass != Some(false))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.pass == Some(false))
    }

    pub fn row(&self, claim: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.claim == claim)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        let report: VerificationReport = serde_json::from_str(text)?;
        if report.schema != SCHEMA {
            return Err(serde::de::Error::custom(format!("unsupported schema `{}`", report.schema)));
        }
        Ok(report)
    }

    /// One line per row: status, claim, computed and expected values.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} (char {}, seed {}, samples {})\n",
            self.instance.family,
            self.instance
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" "),
            self.field_characteristic,
            self.seed,
            self.samples
        );
        for r in &self.rows {
            let status = match r.pass {
                Some(true) => "PASS",
                Some(false) => "FAIL",
                None => "FLAG",
            };
            let computed = match (&r.computed, &r.error) {
                (_, Some(e)) => format!("error: {e}"),
                (Some(v), None) => v.to_string(),
                (None, None) => "-".into(),
            };
            out.push_str(&format!("{status}  {}: computed {computed}, expected {}", r.claim, r.expected));
            if let Some(ms) = r.wall_ms {
                out.push_str(&format!(" [{ms} ms]"));
            }
            out.push('\n');
            if let Some(note) = &r.note {
                out.push_str(&format!("      {note}\n"));
            }
        }
        out
    }
}
