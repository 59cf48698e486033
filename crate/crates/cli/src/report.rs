//! Machine-readable run report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub type LabelSet = Vec<String>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 of the raw input bytes.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub input_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chordal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub covers: Option<Vec<LabelSet>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub covers_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ordering: Option<OrderingReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub shelling: Option<ShellingReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub betti: Option<Vec<BettiEntry>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub betti_by_method: Option<BTreeMap<String, Vec<BettiEntry>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub totals: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub invariants: Option<InvariantsReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unmixed: Option<UnmixedReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub selftest: Option<SelftestReport>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub cross_checks: Vec<CrossCheck>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl RunReport {
    pub fn cross_checks_pass(&self) -> bool {
        self.cross_checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vertex: String,
    pub non_adjacent: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingReport {
    pub method: String,
    pub pivot: String,
    pub gens: Vec<LabelSet>,
    pub colon_counts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingReport {
    pub facets: Vec<LabelSet>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verified: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub v: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub pd: usize,
    pub im: usize,
    pub reg_edge_ideal: usize,
    pub b0: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnmixedReport {
    pub is_unmixed: bool,
    pub free_facets: Vec<LabelSet>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub closed_form: Option<[i64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub not_applicable: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub max_n: usize,
    pub cases: usize,
    pub seed: u64,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}
