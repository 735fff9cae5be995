//! Serializable report documents for orbit partitions and homomesy checks.
//!
//! The JSON layout is stable: struct fields serialize in declaration order
//! and statistics are keyed in a sorted map, so identical inputs produce
//! byte-identical documents. Rationals appear as `p/q` strings.

use crate::dynamics::{rat_to_string, HomomesyCheck, HomomesyVerdict, OrbitReport};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub space: String,
    pub action: String,
    pub nu: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
    pub orbits: Vec<Vec<String>>,
    pub stats: BTreeMap<String, StatDoc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stamp: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatDoc {
    pub per_orbit: Vec<String>,
    pub homomesic: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub constant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessDoc>,
}

/// A replayable homomesy counterexample: two orbit indices whose averages
/// differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub orbit_a: usize,
    pub orbit_b: usize,
    pub avg_a: String,
    pub avg_b: String,
}

impl ReportDoc {
    pub fn new(report: &OrbitReport, checks: &[HomomesyCheck], stamp: Option<u64>) -> ReportDoc {
        let mut stats = BTreeMap::new();
        for check in checks {
            let (homomesic, constant, witness) = match &check.verdict {
                HomomesyVerdict::Homomesic { constant } => {
                    (true, Some(rat_to_string(*constant)), None)
                }
                HomomesyVerdict::Counterexample {
                    orbit_a,
                    orbit_b,
                    avg_a,
                    avg_b,
                } => (
                    false,
                    None,
                    Some(WitnessDoc {
                        orbit_a: *orbit_a,
                        orbit_b: *orbit_b,
                        avg_a: rat_to_string(*avg_a),
                        avg_b: rat_to_string(*avg_b),
                    }),
                ),
            };
            stats.insert(
                check.stat.to_string(),
                StatDoc {
                    per_orbit: check.per_orbit.iter().map(|&r| rat_to_string(r)).collect(),
                    homomesic,
                    constant,
                    witness,
                },
            );
        }
        ReportDoc {
            space: report.space.to_string(),
            action: report.action.tag().to_string(),
            nu: report
                .action
                .nu()
                .map(|p| p.order().to_vec())
                .unwrap_or_default(),
            orbit_sizes: report.orbit_sizes(),
            orbits: report
                .orbits
                .iter()
                .map(|o| o.iter().map(|s| s.to_string()).collect())
                .collect(),
            stats,
            stamp,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<ReportDoc> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            input: s.chars().take(60).collect(),
            what: "report JSON".to_string(),
            token: e.to_string(),
        })
    }

    /// CSV rendering: one row per (statistic, orbit) pair, or one row per
    /// orbit when the report carries no statistics.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if self.stats.is_empty() {
            out.push_str("orbit,size,states\n");
            for (idx, orbit) in self.orbits.iter().enumerate() {
                out.push_str(&format!(
                    "{},{},{}\n",
                    idx + 1,
                    orbit.len(),
                    orbit.join(" ")
                ));
            }
        } else {
            out.push_str("statistic,orbit,orbit_size,average,homomesic,constant\n");
            for (name, stat) in &self.stats {
                for (idx, avg) in stat.per_orbit.iter().enumerate() {
                    out.push_str(&format!(
                        "{},{},{},{},{},{}\n",
                        name,
                        idx + 1,
                        self.orbit_sizes[idx],
                        avg,
                        stat.homomesic,
                        stat.constant.as_deref().unwrap_or("")
                    ));
                }
            }
        }
        out
    }
}
