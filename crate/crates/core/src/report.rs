//! Whole-pipeline analysis of a graph: every induced chordless cycle is
//! certified, its Betti tables computed and the Eliahou-Kervaire sums
//! compared.

use serde::Serialize;

use crate::betti::{ek_check_with, render_paper_table, BettiOptions, EkReport};
use crate::error::Result;
use crate::graph::{
    cycle_neighborhood, induced_chordless_cycles, CyclePartition, Graph, GraphDocument,
    PartitionSummary,
};
use crate::monomial::{intersect, MonomialIdeal};
use crate::splitting::{
    abc_decomposition, certify, complement_ideal, cycle_ideal, AbcDecomposition, CertifyOptions,
    SplitCertificate,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug)]
pub struct AnalysisOptions {
    pub min_k: usize,
    pub certify: CertifyOptions,
    pub betti: BettiOptions,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            min_k: 4,
            certify: CertifyOptions::default(),
            betti: BettiOptions::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Caps {
    pub max_betti_variables: usize,
    pub max_verify_generators: usize,
    pub max_search_generators: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub graph: GraphDocument,
}

/// The four tables in paper layout.
#[derive(Clone, Debug, Serialize)]
pub struct RenderedTables {
    pub i: String,
    pub j: String,
    pub k: String,
    pub jk: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleAnalysis {
    pub label: String,
    pub partition: PartitionSummary,
    pub neighborhood: Vec<String>,
    pub intersection: MonomialIdeal,
    pub abc: AbcDecomposition,
    pub certificate: SplitCertificate,
    pub ek: EkReport,
    pub tables: RenderedTables,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub tool_version: &'static str,
    pub caps: Caps,
    pub graph: GraphSummary,
    pub cycles: Vec<CycleAnalysis>,
}

pub fn analyze_cycle(
    g: &Graph,
    cp: &CyclePartition,
    opts: &AnalysisOptions,
) -> Result<CycleAnalysis> {
    let certificate = certify(g, cp, &opts.certify)?;
    let ek = ek_check_with(g, cp, &opts.betti)?;
    let tables = RenderedTables {
        i: render_paper_table(&ek.tables.i),
        j: render_paper_table(&ek.tables.j),
        k: render_paper_table(&ek.tables.k),
        jk: render_paper_table(&ek.tables.jk),
    };
    Ok(CycleAnalysis {
        label: cp.label(),
        partition: cp.summary(g),
        neighborhood: cycle_neighborhood(g, cp).into_iter().collect(),
        intersection: intersect(&cycle_ideal(g, cp), &complement_ideal(g, cp)),
        abc: abc_decomposition(g, cp)?,
        certificate,
        ek,
        tables,
    })
}

pub fn analyze(g: &Graph, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let cycles = induced_chordless_cycles(g, opts.min_k)
        .iter()
        .map(|cp| analyze_cycle(g, cp, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(AnalysisReport {
        tool_version: TOOL_VERSION,
        caps: Caps {
            max_betti_variables: opts.betti.max_vars,
            max_verify_generators: opts.certify.max_verify_generators,
            max_search_generators: opts.certify.max_search_generators,
        },
        graph: GraphSummary {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            graph: g.to_document(),
        },
        cycles,
    })
}
