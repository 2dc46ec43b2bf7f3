//! Checkers and data series over a classified [`Universe`](crate::Universe).
//!
//! Every checker returns a [`CheckReport`]; a report passes iff it carries
//! no counterexamples. Scans run in rank order so reports are reproducible.

mod checks;
mod columns;
mod periodicity;
mod remoteness;
mod series;

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub use checks::{
    check_bouton_table, check_exceptional_observations, check_moore_table, check_no_pp_moves,
    check_obs5_column_permutation, check_obs8_and_conjecture, check_thm10, check_winning_moves,
    missing_proposition_items, verify_propositions, PROPOSITION_BOUND,
};
pub use columns::{column_relation, padded_permutation, ColumnRelation};
pub use periodicity::{detect_periodicity, find_period, PeriodicityReport, SequenceMode};
pub use remoteness::{remoteness_comparison, RemotenessHistogram};
pub use series::{
    check_nonmonotonicity, check_pn_share, class_counts, ClassCountRow, ClassCountSeries, Ratio,
    PN_SHARE_MIN_BOUND, PN_SHARE_TARGET, PN_SHARE_TOLERANCE,
};

/// Counterexamples kept verbatim; the full count goes into the stats.
pub const MAX_LISTED: usize = 200;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub bound: u32,
    pub passed: bool,
    pub counterexamples: Vec<Value>,
    pub stats: BTreeMap<String, Value>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, bound: u32) -> Self {
        Self {
            check: check.into(),
            bound,
            passed: true,
            counterexamples: Vec::new(),
            stats: BTreeMap::new(),
        }
    }

    pub fn fail(&mut self, item: impl Into<Value>) {
        self.passed = false;
        let n = self.stat_u64("counterexample_count") + 1;
        self.stat("counterexample_count", n);
        if self.counterexamples.len() < MAX_LISTED {
            self.counterexamples.push(item.into());
        }
    }

    pub fn stat(&mut self, key: &str, v: impl Into<Value>) {
        self.stats.insert(key.to_string(), v.into());
    }

    pub fn stat_u64(&self, key: &str) -> u64 {
        self.stats.get(key).and_then(Value::as_u64).unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One summary line.
    pub fn summary(&self) -> String {
        format!(
            "[{}] {} (bound {}): {} counterexample(s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.check,
            self.bound,
            self.stat_u64("counterexample_count")
        )
    }
}
