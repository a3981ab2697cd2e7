//! The JSON report written by the command-line tool.

use serde::{Deserialize, Serialize};

use crate::abelian::AbelianInvariants;
use crate::catalog::{ExpectedRecord, Mismatch};
use crate::error::Result;
use crate::tensor::{HomotopyInvariants, Method, PropertyReport};
use crate::theorems::{BoundReport, ComplementReport, DecompositionReport, SplittingWitness, Status};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalogStatus {
    Match,
    Mismatch,
    NotInCatalog,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogCheck {
    pub status: CatalogStatus,
    pub record: Option<ExpectedRecord>,
    pub mismatches: Vec<Mismatch>,
}

/// The decomposition check, or the reason it does not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionEntry {
    pub status: Status,
    pub reason: Option<String>,
    pub report: Option<DecompositionReport>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verifications {
    pub semidirect_decomposition: Option<DecompositionEntry>,
    pub complement_case: Option<ComplementReport>,
    pub odd_splitting: Option<SplittingWitness>,
    pub green_bound: Option<BoundReport>,
    pub properties: Option<PropertyReport>,
}

impl Verifications {
    pub fn any_failed(&self) -> bool {
        let statuses = [
            self.semidirect_decomposition.as_ref().map(|e| e.status),
            self.complement_case.as_ref().map(|r| r.status),
            self.odd_splitting.as_ref().map(|w| w.status),
            self.green_bound.as_ref().map(|b| b.status),
        ];
        statuses.into_iter().flatten().any(|s| s.is_fail())
            || self.properties.as_ref().is_some_and(|p| !p.passed())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportJson {
    pub schema: u32,
    pub input: String,
    pub method: Method,
    pub group_order: u64,
    pub abelianization: AbelianInvariants,
    pub invariants: HomotopyInvariants,
    pub catalog: Option<CatalogCheck>,
    pub verifications: Verifications,
    pub timing: Option<Timing>,
}

impl ReportJson {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn without_timing(&self) -> Self {
        ReportJson {
            timing: None,
            ..self.clone()
        }
    }

    pub fn catalog_mismatch(&self) -> bool {
        self.catalog.as_ref().is_some_and(|c| c.status == CatalogStatus::Mismatch)
    }
}
