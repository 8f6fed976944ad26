//! Induced chordless cycles and the vertex/edge partitions they induce.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{normalize, Edge, Graph};
use crate::error::{Error, Result};

/// An induced chordless cycle `u_1 .. u_k` (k >= 4) of a graph together with
/// the split of the vertices into cycle and outside vertices, and of the
/// edges into cycle edges, outside edges and crossing edges.
///
/// Cycle positions are 0-based here and wrap modulo `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclePartition {
    cycle: Vec<usize>,
    names: Vec<String>,
    outside: Vec<usize>,
    eu: BTreeSet<Edge>,
    ew: BTreeSet<Edge>,
    ex: BTreeSet<Edge>,
}

impl CyclePartition {
    pub fn k(&self) -> usize {
        self.cycle.len()
    }

    /// Vertex indices in cyclic order.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn cycle_names(&self) -> &[String] {
        &self.names
    }

    pub fn outside(&self) -> &[usize] {
        &self.outside
    }

    /// Vertex index at cycle position `i`, taken mod k.
    pub fn at(&self, i: usize) -> usize {
        self.cycle[i % self.k()]
    }

    /// Cycle position of vertex `v`, if `v` lies on the cycle.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.cycle.iter().position(|&c| c == v)
    }

    pub fn cycle_mask(&self) -> u64 {
        self.cycle.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn eu(&self) -> &BTreeSet<Edge> {
        &self.eu
    }

    pub fn ew(&self) -> &BTreeSet<Edge> {
        &self.ew
    }

    pub fn ex(&self) -> &BTreeSet<Edge> {
        &self.ex
    }

    /// `(u_i, u_{i+1})` for cycle position `i`.
    pub fn cycle_edge(&self, i: usize) -> (usize, usize) {
        (self.at(i), self.at(i + 1))
    }

    /// `(u1,u2,...,uk)`
    pub fn label(&self) -> String {
        format!("({})", self.names.join(","))
    }

    pub fn summary(&self, g: &Graph) -> PartitionSummary {
        let names = |set: &BTreeSet<Edge>| {
            set.iter()
                .map(|&(a, b)| [g.name(a).to_string(), g.name(b).to_string()])
                .collect()
        };
        PartitionSummary {
            cycle: self.names.clone(),
            k: self.k(),
            outside: self
                .outside
                .iter()
                .map(|&v| g.name(v).to_string())
                .collect(),
            eu: names(&self.eu),
            ew: names(&self.ew),
            ex: names(&self.ex),
        }
    }
}

/// Name-level view of a [`CyclePartition`] for reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PartitionSummary {
    pub cycle: Vec<String>,
    pub k: usize,
    pub outside: Vec<String>,
    pub eu: Vec<[String; 2]>,
    pub ew: Vec<[String; 2]>,
    pub ex: Vec<[String; 2]>,
}

/// Checks that `cycle` is an induced chordless cycle of length at least 4
/// and splits the graph relative to it. The given order is kept: the first
/// listed vertex is `u_1`.
pub fn make_cycle_partition<S: AsRef<str>>(g: &Graph, cycle: &[S]) -> Result<CyclePartition> {
    let idx = cycle
        .iter()
        .map(|n| {
            g.index_of(n.as_ref())
                .ok_or_else(|| Error::UnknownVertex(n.as_ref().to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    partition_from_indices(g, idx)
}

pub(crate) fn partition_from_indices(g: &Graph, cycle: Vec<usize>) -> Result<CyclePartition> {
    let k = cycle.len();
    let mask = cycle.iter().fold(0u64, |m, &v| m | 1 << v);
    if mask.count_ones() as usize != k {
        return Err(Error::NotACycle("a vertex is repeated".into()));
    }
    if k < 4 {
        return Err(Error::CycleTooShort(k));
    }
    for i in 0..k {
        let (a, b) = (cycle[i], cycle[(i + 1) % k]);
        if !g.has_edge(a, b) {
            return Err(Error::NotACycle(format!(
                "`{}` and `{}` are not adjacent",
                g.name(a),
                g.name(b)
            )));
        }
    }
    for i in 0..k {
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            if g.has_edge(cycle[i], cycle[j]) {
                return Err(Error::Chord(
                    g.name(cycle[i]).to_string(),
                    g.name(cycle[j]).to_string(),
                ));
            }
        }
    }

    let eu: BTreeSet<Edge> = (0..k)
        .map(|i| normalize(cycle[i], cycle[(i + 1) % k]))
        .collect();
    let mut ew = BTreeSet::new();
    let mut ex = BTreeSet::new();
    for e @ (a, b) in g.edges() {
        let on_a = mask >> a & 1 == 1;
        let on_b = mask >> b & 1 == 1;
        match (on_a, on_b) {
            (true, true) => debug_assert!(eu.contains(&e)),
            (false, false) => {
                ew.insert(e);
            }
            _ => {
                ex.insert(e);
            }
        }
    }
    let outside = (0..g.vertex_count())
        .filter(|&v| mask >> v & 1 == 0)
        .collect();
    let names = cycle.iter().map(|&v| g.name(v).to_string()).collect();
    Ok(CyclePartition {
        cycle,
        names,
        outside,
        eu,
        ew,
        ex,
    })
}

/// Every induced chordless cycle of length at least `min_k`, each once.
///
/// Cycles are reported in canonical form (the lexicographically least of
/// the 2k rotations and reflections of the vertex-name sequence), ordered
/// by length and then by that sequence. Triangles have no partition and are
/// never reported, even for `min_k = 3`.
pub fn induced_chordless_cycles(g: &Graph, min_k: usize) -> Vec<CyclePartition> {
    chordless_cycle_sequences(g, min_k.max(4))
        .into_iter()
        .map(|c| partition_from_indices(g, c).expect("enumerated cycles are chordless"))
        .collect()
}

/// Canonical vertex sequences of all chordless cycles of length at least
/// `min_k`, triangles included when `min_k <= 3`.
pub(crate) fn chordless_cycle_sequences(g: &Graph, min_k: usize) -> Vec<Vec<usize>> {
    let mut found = Vec::new();
    for start in 0..g.vertex_count() {
        // Only vertices above `start` may join, so each cycle is grown from
        // its smallest index.
        let allowed = !0u64 << start << 1;
        let mut path = vec![start];
        extend_path(g, allowed, &mut path, min_k.max(3), &mut found);
    }
    let mut out: Vec<Vec<usize>> = found.iter().map(|c| canonical_rotation(g, c)).collect();
    out.sort_by(|a, b| {
        a.len().cmp(&b.len()).then_with(|| {
            a.iter()
                .map(|&v| g.name(v))
                .cmp(b.iter().map(|&v| g.name(v)))
        })
    });
    out.dedup();
    out
}

fn extend_path(
    g: &Graph,
    allowed: u64,
    path: &mut Vec<usize>,
    min_k: usize,
    found: &mut Vec<Vec<usize>>,
) {
    let start = path[0];
    let last = *path.last().unwrap();
    let interior = if path.len() > 2 {
        path[1..path.len() - 1]
            .iter()
            .fold(0u64, |m, &v| m | 1 << v)
    } else {
        0
    };
    let on_path = path.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut candidates = g.neighbor_mask(last) & allowed & !on_path;
    while candidates != 0 {
        let x = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let nx = g.neighbor_mask(x);
        if nx & interior != 0 {
            continue;
        }
        if path.len() >= 2 && nx >> start & 1 == 1 {
            // x closes a chordless cycle; requiring the second vertex below
            // the closing one skips the mirror image
            if path.len() + 1 >= min_k && path[1] < x {
                let mut c = path.clone();
                c.push(x);
                found.push(c);
            }
            continue;
        }
        path.push(x);
        extend_path(g, allowed, path, min_k, found);
        path.pop();
    }
}

fn canonical_rotation(g: &Graph, cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let mut best: Option<Vec<usize>> = None;
    for forward in [true, false] {
        for r in 0..k {
            let cand: Vec<usize> = (0..k)
                .map(|i| {
                    if forward {
                        cycle[(r + i) % k]
                    } else {
                        cycle[(r + k - i) % k]
                    }
                })
                .collect();
            let better = match &best {
                None => true,
                Some(b) => cand
                    .iter()
                    .map(|&v| g.name(v))
                    .lt(b.iter().map(|&v| g.name(v))),
            };
            if better {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// First cycle position `i` such that both `u_i` and `u_{i+1}` have degree
/// greater than 2, as the pair of vertex indices.
pub fn hypothesis_violation(g: &Graph, cp: &CyclePartition) -> Option<(usize, usize)> {
    (0..cp.k())
        .map(|i| cp.cycle_edge(i))
        .find(|&(a, b)| g.degree_of(a) > 2 && g.degree_of(b) > 2)
}

/// True iff no two consecutive cycle vertices both have degree above 2.
pub fn splitting_condition(g: &Graph, cp: &CyclePartition) -> bool {
    hypothesis_violation(g, cp).is_none()
}

/// `G \ C_k`: all vertices, all edges except the cycle's.
pub fn cycle_complement(g: &Graph, cp: &CyclePartition) -> Graph {
    g.filter_edges(|e| !cp.eu.contains(&e))
}

/// Union of the open neighbourhoods of the cycle vertices, minus the cycle.
pub fn cycle_neighborhood(g: &Graph, cp: &CyclePartition) -> BTreeSet<String> {
    let cmask = cp.cycle_mask();
    let mut nb = cp.cycle.iter().fold(0u64, |m, &v| m | g.neighbor_mask(v)) & !cmask;
    let mut out = BTreeSet::new();
    while nb != 0 {
        let v = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        out.insert(g.name(v).to_string());
    }
    out
}
