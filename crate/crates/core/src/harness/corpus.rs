//! Graph corpora for sweeps.
//!
//! A corpus spec is a comma-separated list of items:
//!
//! * `default`: connected graphs on 2..=5 vertices, paths and cycles up to 8 vertices,
//!   and 20 seeded random graphs on at most 6 vertices;
//! * `connected:A-B`, `paths:A-B`, `cycles:A-B`, `complete:A-B`: ranges of vertex counts;
//! * `random:COUNT:NMAX`: seeded random graphs with `p` cycling through 3/10, 1/2, 7/10;
//! * any single family accepted by [`Family::parse`], e.g. `cycle:5` or `random:6:1/2:7`.
//!
//! Entries are deduplicated by id, keeping the first occurrence.

use std::collections::BTreeSet;

use num_rational::Ratio;

use crate::error::HarnessError;
use crate::graph::{connected_graphs, family, Family, Graph};

/// Largest power checked by default for a graph on `n` vertices.
pub fn default_smax(n: usize) -> u32 {
    match n {
        0..=4 => 3,
        5 | 6 => 2,
        _ => 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Graph,
    pub smax: u32,
}

impl CorpusEntry {
    pub fn new(id: impl Into<String>, graph: Graph) -> Self {
        let smax = default_smax(graph.n());
        CorpusEntry { id: id.into(), graph, smax }
    }
}

/// A parsed corpus spec, expanded on demand with a base seed for the random items.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    items: Vec<Item>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Item {
    Default,
    Connected(usize, usize),
    Paths(usize, usize),
    Cycles(usize, usize),
    Complete(usize, usize),
    Random { count: usize, nmax: usize },
    Single(String),
}

const RANDOM_PROBABILITIES: [(u64, u64); 3] = [(3, 10), (1, 2), (7, 10)];

impl CorpusSpec {
    pub fn parse(spec: &str) -> Result<CorpusSpec, HarnessError> {
        let bad = |s: &str| HarnessError::Corpus(s.to_string());
        let range = |item: &str, r: &str| -> Result<(usize, usize), HarnessError> {
            let (a, b) = r.split_once('-').unwrap_or((r, r));
            let (a, b) = (a.parse().map_err(|_| bad(item))?, b.parse().map_err(|_| bad(item))?);
            if a > b {
                return Err(bad(item));
            }
            Ok((a, b))
        };
        let mut items = Vec::new();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let parsed = match item.split_once(':') {
                None if item == "default" => Item::Default,
                Some(("connected", r)) => range(item, r).map(|(a, b)| Item::Connected(a, b))?,
                Some(("paths", r)) => range(item, r).map(|(a, b)| Item::Paths(a, b))?,
                Some(("cycles", r)) => range(item, r).map(|(a, b)| Item::Cycles(a, b))?,
                Some(("complete", r)) if r.contains('-') => range(item, r).map(|(a, b)| Item::Complete(a, b))?,
                Some(("random", rest)) if rest.split(':').count() == 2 && !rest.contains(['/', '.']) => {
                    let (c, n) = rest.split_once(':').expect("two fields");
                    let count = c.parse().map_err(|_| bad(item))?;
                    let nmax: usize = n.parse().map_err(|_| bad(item))?;
                    if nmax < 2 {
                        return Err(bad(item));
                    }
                    Item::Random { count, nmax }
                }
                _ => {
                    Family::parse(item, 0).map_err(|_| bad(item))?;
                    Item::Single(item.to_string())
                }
            };
            items.push(parsed);
        }
        Ok(CorpusSpec { items })
    }

    /// Expands the spec. Random items use seeds `seed, seed + 1, …`.
    pub fn entries(&self, seed: u64) -> Result<Vec<CorpusEntry>, HarnessError> {
        let mut out = Vec::new();
        for item in &self.items {
            match item {
                Item::Default => {
                    out.extend(connected(2, 5));
                    out.extend(families(2, 8, Family::Path)?);
                    out.extend(families(3, 8, Family::Cycle)?);
                    out.extend(random(20, 6, seed)?);
                }
                Item::Connected(a, b) => out.extend(connected(*a, *b)),
                Item::Paths(a, b) => out.extend(families(*a, *b, Family::Path)?),
                Item::Cycles(a, b) => out.extend(families(*a, *b, Family::Cycle)?),
                Item::Complete(a, b) => out.extend(families(*a, *b, Family::Complete)?),
                Item::Random { count, nmax } => out.extend(random(*count, *nmax, seed)?),
                Item::Single(s) => {
                    let f = Family::parse(s, seed)?;
                    out.push(CorpusEntry::new(f.id(), family(&f)?));
                }
            }
        }
        let mut seen = BTreeSet::new();
        out.retain(|e| seen.insert(e.id.clone()));
        Ok(out)
    }
}

fn connected(a: usize, b: usize) -> Vec<CorpusEntry> {
    (a..=b)
        .flat_map(|n| {
            connected_graphs(n).into_iter().enumerate().map(move |(k, g)| CorpusEntry::new(format!("connected:{n}:{k}"), g))
        })
        .collect()
}

fn families(a: usize, b: usize, f: fn(usize) -> Family) -> Result<Vec<CorpusEntry>, HarnessError> {
    (a..=b)
        .map(|n| {
            let fam = f(n);
            Ok(CorpusEntry::new(fam.id(), family(&fam)?))
        })
        .collect()
}

/// `count` random graphs; vertex counts cycle through `2..=nmax`.
fn random(count: usize, nmax: usize, seed: u64) -> Result<Vec<CorpusEntry>, HarnessError> {
    (0..count)
        .map(|k| {
            let (num, den) = RANDOM_PROBABILITIES[k % RANDOM_PROBABILITIES.len()];
            let fam = Family::Random { n: 2 + k % (nmax - 1), p: Ratio::new(num, den), seed: seed + k as u64 };
            Ok(CorpusEntry::new(fam.id(), family(&fam)?))
        })
        .collect()
}
