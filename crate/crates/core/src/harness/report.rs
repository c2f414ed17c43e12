use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::betti::table::BettiTable;
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;

/// Graph-level quantities shared by every check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub n: usize,
    pub e: usize,
    pub alpha: usize,
    /// Dimension of the stable complex of `G`.
    pub c: i64,
    pub nu_g: usize,
    pub nu_gstar: usize,
    /// Dimension of the stable complex of the whisker graph, always `n − 1`.
    pub c_gstar: i64,
    pub hansen: u64,
    /// Kwok's bound as `p/q`; absent for edgeless graphs.
    pub kwok: Option<String>,
    pub kwok_floor: Option<i64>,
}

/// Regularities at one power `s`; a field is filled only when some check needed it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerRow {
    pub s: u32,
    pub reg_i: Option<i64>,
    pub reg_j: Option<i64>,
    pub reg_jpol: Option<i64>,
    pub reg_istar: Option<i64>,
}

impl PowerRow {
    fn absorb(&mut self, other: &PowerRow) {
        self.reg_i = self.reg_i.or(other.reg_i);
        self.reg_j = self.reg_j.or(other.reg_j);
        self.reg_jpol = self.reg_jpol.or(other.reg_jpol);
        self.reg_istar = self.reg_istar.or(other.reg_istar);
    }
}

/// Everything needed to replay a failed verdict in isolation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub graph: Graph,
    pub s: Option<u32>,
    pub values: BTreeMap<String, i64>,
    pub ideals: BTreeMap<String, MonomialIdeal>,
    pub betti: BTreeMap<String, BettiTable>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    /// The check that produced this verdict, e.g. `equal`.
    pub check: String,
    /// The specific assertion, e.g. `equal_constancy`.
    pub name: String,
    /// `None` for assertions about the graph rather than one power.
    pub s: Option<u32>,
    pub passed: bool,
    /// The assertion with the computed numbers substituted.
    pub detail: String,
    pub failure: Option<Failure>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub graph_id: String,
    pub graph: Graph,
    pub smax: u32,
    pub invariants: Invariants,
    pub rows: Vec<PowerRow>,
    pub verdicts: Vec<Verdict>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.passed)
    }

    pub fn row(&self, s: u32) -> Option<&PowerRow> {
        self.rows.iter().find(|r| r.s == s)
    }

    /// Folds another report on the same graph into this one.
    pub fn merge(&mut self, other: TheoremReport) {
        debug_assert_eq!(self.graph, other.graph);
        for r in &other.rows {
            match self.rows.iter_mut().find(|x| x.s == r.s) {
                Some(x) => x.absorb(r),
                None => self.rows.push(r.clone()),
            }
        }
        self.rows.sort_by_key(|r| r.s);
        self.smax = self.smax.max(other.smax);
        self.verdicts.extend(other.verdicts);
    }

    /// Outcome of `check` at power `s`, counting graph-level verdicts at every power.
    pub fn cell(&self, check: &str, s: u32) -> Option<bool> {
        let relevant: Vec<bool> = self
            .verdicts
            .iter()
            .filter(|v| v.check == check && v.s.map_or(true, |x| x == s))
            .map(|v| v.passed)
            .collect();
        (!relevant.is_empty()).then(|| relevant.iter().all(|&p| p))
    }
}

/// A per-instance problem that did not produce verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceError {
    pub graph_id: String,
    pub message: String,
    pub resource: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub checks: Vec<String>,
    pub reports: Vec<TheoremReport>,
    pub errors: Vec<InstanceError>,
    /// Instances left out of theorem checks (edgeless graphs), with the reason.
    pub skipped: Vec<InstanceError>,
}

pub const CSV_HEADER: [&str; 13] = [
    "graph_id", "n", "e", "s", "c", "nu_G", "nu_Gstar", "reg_I", "reg_J", "reg_Jpol", "reg_Istar", "hansen", "kwok_floor",
];

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(TheoremReport::passed)
    }

    pub fn failed_verdicts(&self) -> usize {
        self.reports.iter().map(|r| r.failures().count()).sum()
    }

    pub fn verdict_count(&self) -> usize {
        self.reports.iter().map(|r| r.verdicts.len()).sum()
    }

    pub fn has_resource_errors(&self) -> bool {
        self.errors.iter().any(|e| e.resource)
    }

    /// One row per graph and power, one trailing column per check.
    pub fn to_csv(&self) -> String {
        let mut out = CSV_HEADER.join(",");
        for c in &self.checks {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        let opt = |v: Option<i64>| v.map_or(String::new(), |x| x.to_string());
        for r in &self.reports {
            let inv = &r.invariants;
            for row in &r.rows {
                let mut cells = vec![
                    r.graph_id.clone(),
                    inv.n.to_string(),
                    inv.e.to_string(),
                    row.s.to_string(),
                    inv.c.to_string(),
                    inv.nu_g.to_string(),
                    inv.nu_gstar.to_string(),
                    opt(row.reg_i),
                    opt(row.reg_j),
                    opt(row.reg_jpol),
                    opt(row.reg_istar),
                    inv.hansen.to_string(),
                    opt(inv.kwok_floor),
                ];
                for c in &self.checks {
                    cells.push(match r.cell(c, row.s) {
                        Some(true) => "pass".into(),
                        Some(false) => "fail".into(),
                        None => String::new(),
                    });
                }
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        out
    }
}
