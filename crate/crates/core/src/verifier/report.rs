use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::check::{check_instance, GroupContext};
use super::claims::{ClaimId, ClaimKind};
use super::{CatalogEntry, CheckOptions, ClaimVerdict, Verdict};

/// Verdicts sorted by (claim, group spec, subgroup members).
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub verdicts: Vec<ClaimVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummaryRow {
    pub claim: ClaimId,
    pub kind: ClaimKind,
    pub holds: usize,
    pub fails: usize,
    pub skipped: usize,
    pub inapplicable: usize,
}

/// Evaluates every claim on every catalog pair using a pool of
/// `parallelism` threads. The result does not depend on `parallelism`.
pub fn sweep(catalog: &[CatalogEntry], claims: &[ClaimId], parallelism: usize, options: CheckOptions) -> Report {
    let contexts: Vec<GroupContext> =
        catalog.iter().map(|e| GroupContext::new(e.spec.clone(), e.group.clone())).collect();
    let tasks: Vec<(usize, usize)> = catalog
        .iter()
        .enumerate()
        .flat_map(|(i, e)| (0..e.subgroups.len()).map(move |j| (i, j)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .expect("thread pool");
    let mut verdicts: Vec<ClaimVerdict> = pool.install(|| {
        tasks
            .par_iter()
            .flat_map_iter(|&(i, j)| check_instance(&contexts[i], &catalog[i].subgroups[j], claims, options))
            .collect()
    });
    verdicts.sort_by(|a, b| (a.claim, &a.group, &a.subgroup).cmp(&(b.claim, &b.group, &b.subgroup)));
    Report { verdicts }
}

impl Report {
    /// Line-delimited JSON, one record per verdict.
    pub fn to_jsonl(&self, timings: bool) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            out.push_str(&v.to_json_line(timings));
            out.push('\n');
        }
        out
    }

    /// Verdict counts per claim, in claim order; claims without verdicts are
    /// omitted.
    pub fn summary(&self) -> Vec<SummaryRow> {
        let mut rows: Vec<SummaryRow> = Vec::new();
        for v in &self.verdicts {
            if rows.last().map(|r| r.claim) != Some(v.claim) {
                rows.push(SummaryRow {
                    claim: v.claim,
                    kind: v.claim.claim().kind,
                    holds: 0,
                    fails: 0,
                    skipped: 0,
                    inapplicable: 0,
                });
            }
            let row = rows.last_mut().unwrap();
            match v.verdict {
                Verdict::Holds => row.holds += 1,
                Verdict::Fails => row.fails += 1,
                Verdict::Skipped => row.skipped += 1,
                Verdict::Inapplicable => row.inapplicable += 1,
            }
        }
        rows
    }

    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{:<6} {:<12} {:>7} {:>7} {:>7} {:>12}  title", "claim", "kind", "holds", "fails", "skipped", "inapplicable")
            .unwrap();
        for r in self.summary() {
            writeln!(
                out,
                "{:<6} {:<12} {:>7} {:>7} {:>7} {:>12}  {}",
                r.claim.to_string(),
                r.kind.to_string(),
                r.holds,
                r.fails,
                r.skipped,
                r.inapplicable,
                r.claim.claim().title
            )
            .unwrap();
        }
        out
    }

    pub fn must_pass_failed(&self) -> bool {
        self.verdicts.iter().any(ClaimVerdict::is_must_pass_failure)
    }

    /// 1 if a must-pass claim failed, else 0.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.must_pass_failed())
    }
}
