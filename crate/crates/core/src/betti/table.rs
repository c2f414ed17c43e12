use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::ideal::Multidegree;

/// Nonzero multigraded Betti numbers `β_{i,a}` of an ideal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Multidegree), u64>,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, Multidegree), u64)>) -> Self {
        BettiTable { entries: entries.into_iter().filter(|(_, d)| *d > 0).collect() }
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Multidegree), u64> {
        &self.entries
    }

    pub fn get(&self, i: usize, a: &Multidegree) -> u64 {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// `β_{i,j} = Σ_{|a| = j} β_{i,a}`.
    pub fn graded(&self) -> BTreeMap<(usize, u64), u64> {
        let mut out = BTreeMap::new();
        for ((i, a), d) in &self.entries {
            *out.entry((*i, a.degree())).or_insert(0) += d;
        }
        out
    }

    /// Total Betti numbers `β_i`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0; self.projdim().map_or(0, |p| p + 1)];
        for ((i, _), d) in &self.entries {
            out[*i] += d;
        }
        out
    }

    /// `max(|a| − i)`; `None` for an empty table.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|(i, a)| a.degree() as i64 - *i as i64).max()
    }

    pub fn projdim(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Diagram with rows `j − i` and columns `i`, plus a `total:` row.
    pub fn diagram(&self) -> String {
        let graded = self.graded();
        let Some(pd) = self.projdim() else {
            return "(zero)\n".into();
        };
        let rows: Vec<i64> = graded.keys().map(|(i, j)| *j as i64 - *i as i64).collect();
        let (lo, hi) = (*rows.iter().min().unwrap(), *rows.iter().max().unwrap());
        let totals = self.totals();
        let width = totals.iter().map(|t| t.to_string().len()).max().unwrap_or(1).max(pd.to_string().len());
        let label = format!("{hi}:").len().max("total:".len());
        let mut out = String::new();
        let _ = write!(out, "{:>label$}", "");
        for i in 0..=pd {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>label$}", "total:");
        for t in &totals {
            let _ = write!(out, " {t:>width$}");
        }
        out.push('\n');
        for r in lo..=hi {
            let _ = write!(out, "{:>label$}", format!("{r}:"));
            for i in 0..=pd {
                let j = r + i as i64;
                let d = if j < 0 { 0 } else { graded.get(&(i, j as u64)).copied().unwrap_or(0) };
                if d == 0 {
                    let _ = write!(out, " {:>width$}", ".");
                } else {
                    let _ = write!(out, " {d:>width$}");
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            entries: self.entries.iter().map(|((i, a), d)| EntryJson { i: *i, a: a.0.clone(), dim: *d }).collect(),
            graded: self.graded().into_iter().map(|((i, j), d)| GradedJson { i, j, dim: d }).collect(),
            regularity: self.regularity(),
            projdim: self.projdim(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub i: usize,
    pub a: Vec<u32>,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedJson {
    pub i: usize,
    pub j: u64,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub entries: Vec<EntryJson>,
    pub graded: Vec<GradedJson>,
    pub regularity: Option<i64>,
    pub projdim: Option<usize>,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = BettiJson::deserialize(d)?;
        let t = BettiTable::from_entries(j.entries.into_iter().map(|e| ((e.i, Multidegree(e.a)), e.dim)));
        if t.regularity() != j.regularity || t.projdim() != j.projdim || t.to_json().graded != j.graded {
            return Err(serde::de::Error::custom("derived fields disagree with entries"));
        }
        Ok(t)
    }
}
