//! JSON report types. Field order is the serialization order and maps are
//! sorted, so identical runs produce identical bytes.

use std::collections::BTreeMap;

use serde::Serialize;

use lieorbit::coadjoint::Status;
use lieorbit::{CascadeTree, ClassificationRow, RootSystem, Subspace, TheoremReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Default)]
pub struct Input {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suites: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_rank_limit: Option<usize>,
}

#[derive(Serialize)]
pub struct CascadeEntry {
    pub coords: Vec<i32>,
    pub parent: Option<usize>,
    pub depth: usize,
}

pub fn cascade_entries(tree: &CascadeTree) -> Vec<CascadeEntry> {
    tree.nodes()
        .iter()
        .map(|n| CascadeEntry {
            coords: n.root.coords().to_vec(),
            parent: n.parent,
            depth: n.depth,
        })
        .collect()
}

#[derive(Serialize, Clone)]
pub struct Row {
    #[serde(rename = "type")]
    pub type_name: String,
    pub family: String,
    pub rank: usize,
    pub m: usize,
    pub ell: usize,
    pub minus_one_in_weyl: bool,
    pub open_coadjoint_orbit: bool,
    pub consistent: bool,
}

impl From<&ClassificationRow> for Row {
    fn from(r: &ClassificationRow) -> Self {
        Row {
            type_name: r.simple_type.to_string(),
            family: r.simple_type.family().letter().to_string(),
            rank: r.simple_type.rank(),
            m: r.m,
            ell: r.ell,
            minus_one_in_weyl: r.minus_one_in_weyl,
            open_coadjoint_orbit: r.open_coadjoint_orbit,
            consistent: r.consistent(),
        }
    }
}

#[derive(Serialize)]
pub struct WitnessEntry {
    pub label: String,
    pub holds: bool,
    pub dims: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<String>>>,
}

fn basis_strings(s: &Subspace) -> Vec<Vec<String>> {
    s.basis()
        .row_iter()
        .map(|v| v.iter().map(|q| q.to_string()).collect())
        .collect()
}

#[derive(Serialize)]
pub struct SuiteEntry {
    pub id: String,
    pub suite: String,
    pub status: &'static str,
    pub pass: bool,
    pub dims: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped_reason: Option<String>,
    pub failed: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

pub fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
    }
}

impl SuiteEntry {
    pub fn new(
        suite: &str,
        r: &TheoremReport,
        with_witnesses: bool,
        timing_ms: Option<u64>,
    ) -> Self {
        SuiteEntry {
            id: r.id.clone(),
            suite: suite.to_string(),
            status: status_name(r.status()),
            pass: r.pass(),
            dims: r.dims.clone(),
            skipped_reason: r.skipped.clone(),
            failed: r
                .witnesses
                .iter()
                .filter(|w| !w.holds)
                .map(|w| w.label.clone())
                .collect(),
            witnesses: with_witnesses.then(|| {
                r.witnesses
                    .iter()
                    .map(|w| WitnessEntry {
                        label: w.label.clone(),
                        holds: w.holds,
                        dims: w.dims.clone(),
                        basis: w.subspace.as_ref().map(basis_strings),
                    })
                    .collect()
            }),
            timing_ms,
        }
    }
}

#[derive(Serialize)]
pub struct CascadeReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub input: Input,
    #[serde(flatten)]
    pub row: Row,
    pub cascade: Vec<CascadeEntry>,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub input: Input,
    #[serde(flatten)]
    pub row: Row,
    pub cascade: Vec<CascadeEntry>,
    pub suites: Vec<SuiteEntry>,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub input: Input,
    pub rows: Vec<Row>,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct AlgebraInfoReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub input: Input,
    #[serde(rename = "type")]
    pub type_name: String,
    pub family: String,
    pub rank: usize,
    pub dim: usize,
    pub num_roots: usize,
    pub num_positive: usize,
    pub cartan: Vec<Vec<i32>>,
    pub highest_root: Vec<i32>,
    pub simple_root_lengths: Vec<String>,
    pub dim_b: usize,
    pub dim_n: usize,
}

impl AlgebraInfoReport {
    pub fn new(input: Input, rs: &RootSystem, dim: usize) -> Self {
        let t = rs.simple_type().expect("built from a simple type");
        let gram = rs.gram();
        AlgebraInfoReport {
            schema_version: SCHEMA_VERSION,
            command: "algebra-info",
            input,
            type_name: t.to_string(),
            family: t.family().letter().to_string(),
            rank: rs.rank(),
            dim,
            num_roots: rs.roots().len(),
            num_positive: rs.num_positive(),
            cartan: rs.cartan().to_vec(),
            highest_root: rs.highest_root().coords().to_vec(),
            simple_root_lengths: (0..rs.rank()).map(|i| gram[i][i].to_string()).collect(),
            dim_b: rs.rank() + rs.num_positive(),
            dim_n: rs.num_positive(),
        }
    }
}
