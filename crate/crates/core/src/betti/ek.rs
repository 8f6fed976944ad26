use serde::Serialize;

use super::{graded_betti_ideal_with, BettiOptions, BettiTable};
use crate::error::Result;
use crate::graph::{CyclePartition, Graph};
use crate::monomial::{edge_ideal, intersect, MonomialIdeal};
use crate::splitting::{complement_ideal, cycle_ideal};

/// One homological degree of the total comparison
/// `β_i(I) = β_i(J) + β_i(K) + β_{i-1}(J∩K)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EkColumn {
    pub i: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EkGradedEntry {
    pub i: usize,
    pub j: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EkTables {
    pub i: BettiTable,
    pub j: BettiTable,
    pub k: BettiTable,
    pub jk: BettiTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EkReport {
    pub columns: Vec<EkColumn>,
    pub overall: bool,
    /// Degree-wise comparison; informational only.
    pub graded: Vec<EkGradedEntry>,
    pub graded_overall: bool,
    pub tables: EkTables,
}

impl EkReport {
    pub fn column(&self, i: usize) -> Option<&EkColumn> {
        self.columns.get(i)
    }

    pub fn failing_columns(&self) -> Vec<usize> {
        self.columns
            .iter()
            .filter(|c| !c.equal)
            .map(|c| c.i)
            .collect()
    }
}

pub fn ek_check(g: &Graph, cp: &CyclePartition) -> Result<EkReport> {
    ek_check_with(g, cp, &BettiOptions::default())
}

/// Compares Betti numbers of `I(G)` with those of the cycle ideal, the
/// complement ideal and their intersection.
pub fn ek_check_with(g: &Graph, cp: &CyclePartition, opts: &BettiOptions) -> Result<EkReport> {
    crate::splitting::check_partition(g, cp)?;
    ek_check_ideals(
        &edge_ideal(g),
        &cycle_ideal(g, cp),
        &complement_ideal(g, cp),
        opts,
    )
}

/// The same comparison for arbitrary square-free `I`, `J`, `K`.
pub fn ek_check_ideals(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    opts: &BettiOptions,
) -> Result<EkReport> {
    let tables = EkTables {
        i: graded_betti_ideal_with(i, opts)?,
        j: graded_betti_ideal_with(j, opts)?,
        k: graded_betti_ideal_with(k, opts)?,
        jk: graded_betti_ideal_with(&intersect(j, k), opts)?,
    };
    Ok(compare(tables))
}

fn compare(tables: EkTables) -> EkReport {
    let (ti, tj, tk, tjk) = (
        tables.i.totals(),
        tables.j.totals(),
        tables.k.totals(),
        tables.jk.totals(),
    );
    let at = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
    let width = ti.len().max(tj.len()).max(tk.len()).max(tjk.len() + 1);
    let columns: Vec<EkColumn> = (0..width)
        .map(|i| {
            let lhs = at(&ti, i);
            let rhs = at(&tj, i) + at(&tk, i) + if i == 0 { 0 } else { at(&tjk, i - 1) };
            EkColumn {
                i,
                lhs,
                rhs,
                equal: lhs == rhs,
            }
        })
        .collect();

    let mut keys: Vec<(usize, usize)> = tables
        .i
        .entries()
        .chain(tables.j.entries())
        .chain(tables.k.entries())
        .map(|(key, _)| key)
        .chain(tables.jk.entries().map(|((i, j), _)| (i + 1, j)))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    let graded: Vec<EkGradedEntry> = keys
        .into_iter()
        .map(|(i, j)| {
            let lhs = tables.i.get(i, j);
            let rhs = tables.j.get(i, j)
                + tables.k.get(i, j)
                + if i == 0 { 0 } else { tables.jk.get(i - 1, j) };
            EkGradedEntry {
                i,
                j,
                lhs,
                rhs,
                equal: lhs == rhs,
            }
        })
        .collect();

    EkReport {
        overall: columns.iter().all(|c| c.equal),
        graded_overall: graded.iter().all(|e| e.equal),
        columns,
        graded,
        tables,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::induced_chordless_cycles;
    use crate::monomial::parse_ideal;
    use crate::testutil::{c4_pendant, example1, example2};

    fn report(g: &Graph) -> EkReport {
        let cp = &induced_chordless_cycles(g, 4)[0];
        ek_check(g, cp).unwrap()
    }

    #[test]
    fn first_example_holds() {
        let r = report(&example1());
        assert!(r.overall);
        assert!(r.graded_overall);
        assert_eq!(r.tables.j.totals(), [4, 4, 1]);
        assert_eq!(r.tables.k.totals(), [2, 1]);
        assert_eq!(r.tables.jk.totals(), [3, 2]);
        assert_eq!(r.columns[0].rhs, 6);
    }

    #[test]
    fn second_example_fails_in_the_middle() {
        let r = report(&example2());
        assert!(!r.overall);
        assert_eq!(r.failing_columns(), [1, 2]);
        assert!(r.column(3).unwrap().equal);
        assert_eq!(r.tables.k.totals(), [4, 6, 4, 1]);
        assert_eq!(r.tables.jk.totals(), [6, 6, 1]);
    }

    #[test]
    fn certified_splitting_satisfies_the_formula() {
        assert!(report(&c4_pendant()).overall);
    }

    #[test]
    fn two_disjoint_edges() {
        let i = parse_ideal("a*b, c*d").unwrap();
        let j = parse_ideal("a*b").unwrap();
        let k = parse_ideal("c*d").unwrap();
        let r = ek_check_ideals(&i, &j, &k, &BettiOptions::default()).unwrap();
        assert!(r.overall);
        assert!(r.graded_overall);
        assert_eq!(r.tables.jk.totals(), [1]);
        assert_eq!(r.columns.len(), 2);
    }
}
