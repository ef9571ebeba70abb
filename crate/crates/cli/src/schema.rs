//! JSON documents written by `--format json`. Rationals are literal strings
//! (`"-85/256"`), so every value round-trips exactly.

use mstep::catalog::{CatalogListing, DiscrepancyReport};
use mstep::simson::ClosedForm;
use mstep::{Rational, SequenceSpec};
use serde::{Deserialize, Serialize};

/// `eval`: the spec and evaluator as a header, then one row per index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalDocument {
    pub spec: SequenceSpec,
    pub algorithm: String,
    pub lo: i64,
    pub hi: i64,
    pub rows: Vec<EvalRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalRow {
    pub n: i64,
    pub value: Rational,
}

/// `simson`: the report plus the closed form it was checked against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimsonDocument {
    pub spec: SequenceSpec,
    pub closed_form: ClosedForm,
    #[serde(flatten)]
    pub report: mstep::SimsonReport,
}

/// `table`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub pass: bool,
    pub tables: Vec<DiscrepancyReport>,
}

/// `catalog --show`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDetail {
    #[serde(flatten)]
    pub listing: CatalogListing,
    pub name: String,
    pub symbol: String,
    pub tables: Vec<String>,
}

/// `bench`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchDocument {
    pub id: Option<String>,
    pub n: i64,
    pub digits: usize,
    pub hash: String,
    pub repeat: u32,
    pub timings: Vec<BenchTiming>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchTiming {
    pub algorithm: String,
    pub best_ms: f64,
    pub mean_ms: f64,
}
