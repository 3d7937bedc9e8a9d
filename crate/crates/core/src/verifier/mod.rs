//! Claims about enhanced quotient graphs, checked on concrete `(G, H)`
//! pairs.
//!
//! Each claim is evaluated neutrally: a verdict is `holds`, `fails` (with a
//! re-checkable [`Witness`]), `skipped` (a size gate blocked an exact
//! algorithm) or `inapplicable` (the instance does not meet the claim's
//! hypotheses). Equivalences are split into ordered implications and the
//! first failing one is reported.

mod catalog;
mod check;
mod claims;
mod report;
mod witness;

pub use catalog::{default_catalog, CatalogEntry, MAX_CATALOG_ORDER};
pub use check::{check_claim, check_instance, GroupContext};
pub use claims::{claim_registry, parse_claim_selector, Claim, ClaimId, ClaimKind};
pub use report::{sweep, Report, SummaryRow};
pub use witness::{recheck, Witness};

use std::time::Duration;

use serde::Serialize;

use crate::graph::Gates;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub gates: Gates,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Skipped,
    Inapplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Skipped => "skipped",
            Verdict::Inapplicable => "inapplicable",
        })
    }
}

/// Outcome of one claim on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ClaimVerdict {
    pub claim: ClaimId,
    pub group: String,
    pub subgroup: Vec<usize>,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Extra computed quantities attached to the record.
    pub evidence: Option<serde_json::Value>,
    /// Why the claim was skipped or inapplicable.
    pub note: Option<String>,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct Record<'a> {
    claim: ClaimId,
    group: &'a str,
    subgroup: &'a [usize],
    verdict: Verdict,
    witness: &'a Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    evidence: &'a Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: &'a Option<String>,
    ms: Option<f64>,
}

impl ClaimVerdict {
    /// One JSON line; `ms` is null unless `timings` is set, so reports
    /// compare byte-for-byte across runs.
    pub fn to_json_line(&self, timings: bool) -> String {
        let record = Record {
            claim: self.claim,
            group: &self.group,
            subgroup: &self.subgroup,
            verdict: self.verdict,
            witness: &self.witness,
            evidence: &self.evidence,
            note: &self.note,
            ms: timings.then(|| (self.elapsed.as_secs_f64() * 1e6).round() / 1e3),
        };
        serde_json::to_string(&record).expect("verdict serializes")
    }

    /// Whether this is a failure of a must-pass claim.
    pub fn is_must_pass_failure(&self) -> bool {
        self.verdict == Verdict::Fails && self.claim.claim().kind == ClaimKind::MustPass
    }
}
