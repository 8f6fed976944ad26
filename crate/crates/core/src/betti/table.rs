use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Graded Betti numbers `β_{i,j}` with `i` the homological degree (starting
/// at 0 for minimal generators) and `j` the internal degree. Zero entries
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TableDocument", try_from = "TableDocument")]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDocument {
    i: usize,
    j: usize,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDocument {
    entries: Vec<EntryDocument>,
    totals: Vec<u64>,
}

impl From<BettiTable> for TableDocument {
    fn from(t: BettiTable) -> Self {
        TableDocument {
            totals: t.totals(),
            entries: t
                .entries
                .into_iter()
                .map(|((i, j), beta)| EntryDocument { i, j, beta })
                .collect(),
        }
    }
}

impl TryFrom<TableDocument> for BettiTable {
    type Error = Error;

    fn try_from(doc: TableDocument) -> Result<Self> {
        let mut t = BettiTable::new();
        for e in doc.entries {
            if t.get(e.i, e.j) != 0 {
                return Err(Error::InvalidArgument(format!(
                    "duplicate Betti entry ({}, {})",
                    e.i, e.j
                )));
            }
            t.add(e.i, e.j, e.beta);
        }
        if t.totals() != doc.totals {
            return Err(Error::InvalidArgument(
                "Betti totals do not match the entries".into(),
            ));
        }
        Ok(t)
    }
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut t = Self::new();
        for ((i, j), b) in entries {
            t.add(i, j, b);
        }
        t
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `β_i = Σ_j β_{i,j}` for `i = 0..=max i`.
    pub fn totals(&self) -> Vec<u64> {
        total_betti(self)
    }

    pub fn max_i(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// The table with every internal degree raised by `dj`, as for the
    /// ideal multiplied by a new variable when `dj = 1`.
    pub fn shifted(&self, dj: usize) -> BettiTable {
        BettiTable::from_entries(self.entries().map(|((i, j), b)| ((i, j + dj), b)))
    }
}

pub fn total_betti(t: &BettiTable) -> Vec<u64> {
    let mut out = Vec::new();
    for (&(i, _), &b) in &t.entries {
        if out.len() <= i {
            out.resize(i + 1, 0);
        }
        out[i] += b;
    }
    out
}
