//! Verifiers for the structure theorems about tensor squares. Each one
//! recomputes both sides of a claimed identity and reports every check.

mod complement_case;
mod decomposition;
mod green;
mod perfect;
mod splitting;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use complement_case::{verify_complement_case, verify_complement_case_with, ComplementReport};
pub use decomposition::{
    verify_decomposition, verify_semidirect_decomposition, DecompositionOrders, DecompositionReport, PartReport,
};
pub use green::{green_bound, green_bound_check, pi2s_closed_form, BoundReport};
pub use perfect::{verify_perfect_normal_sequences, PerfectNormalReport, SequenceReport};
pub use splitting::{odd_splitting, SplittingWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The hypotheses do not hold for this group.
    NotApplicable,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == Status::Fail
    }
}

/// Named boolean checks, ordered by name for stable output.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Checks(BTreeMap<String, bool>);

impl Checks {
    pub fn record(&mut self, name: &str, ok: bool) {
        self.0.insert(name.to_string(), ok);
    }

    pub fn all_pass(&self) -> bool {
        self.0.values().all(|&v| v)
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.0.get(name).copied()
    }

    pub fn failures(&self) -> Vec<&str> {
        self.0.iter().filter(|(_, &v)| !v).map(|(k, _)| k.as_str()).collect()
    }

    pub fn status(&self) -> Status {
        Status::from_bool(self.all_pass())
    }
}
