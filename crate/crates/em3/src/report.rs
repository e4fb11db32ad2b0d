//! JSON shapes of the command reports.
//!
//! Every command prints one [`Report`] under `--json`. Big integers and the
//! parts of rationals are decimal strings so no precision is lost.

use serde::Serialize;

use em3_core::board::{describe_members, CaseReport};
use em3_core::search::SearchResult;
use em3_core::{ExactRational, TripleSystem};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub command: String,
    pub parameters: serde_json::Value,
    pub results: T,
    pub elapsed_ms: u64,
    pub version: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rational {
    pub num: String,
    pub den: String,
}

impl From<&ExactRational> for Rational {
    fn from(q: &ExactRational) -> Self {
        Rational {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

pub fn edges(f: &TripleSystem) -> Vec<[u16; 3]> {
    f.edges().map(|e| e.elements()).collect()
}

#[derive(Debug, Serialize)]
pub struct NuResult {
    pub n: usize,
    pub edges: usize,
    pub nu: usize,
    pub witness: Vec<Vec<u16>>,
}

#[derive(Debug, Serialize)]
pub struct ShiftResult {
    pub n: usize,
    pub edges: usize,
    pub input_stable: bool,
    pub output: Option<String>,
    pub shifted: Vec<[u16; 3]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyStatus {
    /// `m = M`.
    Equal,
    /// `m < M`, expected for property-ONE maxima and for `n < 3s+2`.
    Below,
    /// `m > M`.
    Counterexample,
    /// `m < M` where the constructions should be attained; a search defect.
    Mismatch,
}

impl VerifyStatus {
    pub fn ok(self) -> bool {
        matches!(self, VerifyStatus::Equal | VerifyStatus::Below)
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyResult {
    pub n: usize,
    pub s: usize,
    pub mode: &'static str,
    pub m: usize,
    #[serde(rename = "M")]
    pub big_m: String,
    pub status: VerifyStatus,
    pub nodes_explored: u64,
    pub witness: Vec<[u16; 3]>,
    pub witness_path: Option<String>,
}

impl VerifyResult {
    pub fn new(
        r: &SearchResult,
        big_m: String,
        status: VerifyStatus,
        witness_path: Option<String>,
    ) -> Self {
        VerifyResult {
            n: r.n,
            s: r.s,
            mode: r.mode.as_str(),
            m: r.m,
            big_m,
            status,
            nodes_explored: r.nodes_explored,
            witness: edges(&r.witness),
            witness_path,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct N1Row {
    pub s: u64,
    pub n1_exact: u64,
    pub n1_formula: u64,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactsRow {
    pub s: u64,
    pub n1: u64,
    /// `n₁ ≤ 3.5s + 3`, `n₁ ≥ 3.4s + 1` and `n₁(s) − n₁(s−1) ≥ 2`; the last is `null` for `s = 1`.
    pub bounds_ok: [Option<bool>; 3],
    pub q0_bound: Option<u64>,
    /// `null` where the inequality needs `s ≥ 3`.
    pub trace_bound_ok: Option<bool>,
    pub case1_ok: Option<bool>,
    pub final_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightRow {
    pub s: u64,
    #[serde(rename = "W")]
    pub w: Rational,
    /// `C(s,3)·W = a(s)`.
    pub identity_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactsSummary {
    pub n1_bounds_all: bool,
    pub q0_all: bool,
    /// `fact1_identity_check` on `1 ≤ s ≤ min(s_max, 200)`, `3s+3 ≤ n ≤ 800`.
    pub identity_grid: bool,
    pub trace_bound_all: bool,
    pub case1_all: bool,
    /// Least `s` from which the final inequality holds up to `s_max`.
    pub final_from: Option<u64>,
    pub weights_all: Option<bool>,
}

impl FactsSummary {
    pub fn ok(&self) -> bool {
        self.n1_bounds_all
            && self.q0_all
            && self.identity_grid
            && self.trace_bound_all
            && self.case1_all
            && self.weights_all.unwrap_or(true)
    }
}

#[derive(Debug, Serialize)]
pub struct FactsResult {
    pub rows: Vec<FactsRow>,
    pub weights: Option<Vec<WeightRow>>,
    pub summary: FactsSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseReportJson {
    pub s: usize,
    pub n: Option<usize>,
    pub mode: &'static str,
    pub verified: bool,
    pub max_weight: Rational,
    #[serde(rename = "W")]
    pub w: Rational,
    pub configs_explored: u64,
    pub pair_sets: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl From<&CaseReport> for CaseReportJson {
    fn from(r: &CaseReport) -> Self {
        CaseReportJson {
            s: r.s,
            n: r.n(),
            mode: r.mode.as_str(),
            verified: r.verified,
            max_weight: (&r.max_weight).into(),
            w: (&r.w).into(),
            configs_explored: r.configs_explored,
            pair_sets: r.pair_sets,
            witness: r.witness.as_ref().map(describe_members),
        }
    }
}
