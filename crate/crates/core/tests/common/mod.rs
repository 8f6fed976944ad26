#![allow(dead_code)]

use std::collections::BTreeSet;

use cyclesplit::graph::{induced_chordless_cycles, CyclePartition, Graph};
use cyclesplit::splitting::complement_ideal;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adjacency as bitmasks over vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Small {
    pub n: usize,
    pub adj: Vec<u32>,
}

impl Small {
    pub fn to_graph(&self) -> Graph {
        let names: Vec<String> = (1..=self.n).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.adj[a] >> b & 1 == 1 {
                    edges.push((names[a].clone(), names[b].clone()));
                }
            }
        }
        Graph::new(&names, edges).unwrap()
    }
}

fn code_under(adj: &[u32], order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            code <<= 1;
            if adj[order[a]] >> order[b] & 1 == 1 {
                code |= 1;
            }
        }
    }
    code
}

/// Canonical code: the largest adjacency code over vertex orders that sort
/// by (degree, neighbour degrees), permuting freely inside each class.
fn canonical(adj: &[u32]) -> u64 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let inv: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n)
                .filter(|&u| adj[v] >> u & 1 == 1)
                .map(|u| deg[u])
                .collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in verts {
        match classes.last_mut() {
            Some(c) if inv[c[0]] == inv[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    permute_classes(adj, &classes, 0, &mut order, &mut best);
    best
}

fn permute_classes(
    adj: &[u32],
    classes: &[Vec<usize>],
    ci: usize,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if ci == classes.len() {
        *best = (*best).max(code_under(adj, order));
        return;
    }
    let mut class = classes[ci].clone();
    let len = class.len();
    heap_permutations(&mut class, len, &mut |p| {
        let len = order.len();
        order.extend_from_slice(p);
        permute_classes(adj, classes, ci + 1, order, best);
        order.truncate(len);
    });
}

fn heap_permutations(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, f);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        items.swap(j, k - 1);
    }
}

/// Connected graphs on exactly `n` vertices up to isomorphism, by adding a
/// vertex with a nonempty neighbourhood to each class on `n - 1` vertices.
pub fn connected_graphs(max_n: usize) -> Vec<Small> {
    let mut all = Vec::new();
    let mut layer = vec![Small { n: 1, adj: vec![0] }];
    all.extend(layer.clone());
    for n in 2..=max_n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for nb in 1u32..1 << (n - 1) {
                let mut adj = g.adj.clone();
                adj.push(nb);
                for (v, row) in adj.iter_mut().enumerate().take(n - 1) {
                    if nb >> v & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                if seen.insert(canonical(&adj)) {
                    next.push(Small { n, adj });
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Seeded random graphs on `lo..=hi` vertices with edge probability `p`.
pub fn random_graphs(seed: u64, count: usize, lo: usize, hi: usize, p: f64) -> Vec<Small> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let mut adj = vec![0u32; n];
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(p) {
                        adj[a] |= 1 << b;
                        adj[b] |= 1 << a;
                    }
                }
            }
            Small { n, adj }
        })
        .collect()
}

pub struct Instance {
    pub graph: Graph,
    pub cycle: CyclePartition,
}

/// Every (graph, cycle) pair with a cycle of length at least 4 and a
/// nonzero complement ideal.
pub fn instances(graphs: &[Small]) -> Vec<Instance> {
    let mut out = Vec::new();
    for s in graphs {
        let g = s.to_graph();
        for cp in induced_chordless_cycles(&g, 4) {
            if !complement_ideal(&g, &cp).is_zero() {
                out.push(Instance {
                    graph: g.clone(),
                    cycle: cp,
                });
            }
        }
    }
    out
}

/// The exhaustive sweep on at most 7 vertices.
pub fn exhaustive_instances() -> Vec<Instance> {
    instances(&connected_graphs(7))
}

/// Random graphs on 8 and 9 vertices until `count` of them carry an
/// instance; every instance of those graphs is returned.
pub fn random_instances(seed: u64, count: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    let mut graphs = 0;
    let mut s = seed;
    while graphs < count {
        for g in random_graphs(s, 1, 8, 9, 0.3) {
            let found = instances(&[g]);
            if !found.is_empty() {
                graphs += 1;
                out.extend(found);
            }
        }
        s += 1;
    }
    out
}

/// Random graphs built around a k-cycle whose outside vertices attach only
/// to pairwise non-adjacent cycle vertices, so the degree hypothesis holds.
pub fn hypothesis_instances(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let k = rng.gen_range(4..=6);
        let outside = rng.gen_range(1..=4);
        let n = k + outside;
        let mut adj = vec![0u32; n];
        let link = |adj: &mut Vec<u32>, a: usize, b: usize| {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        };
        for i in 0..k {
            link(&mut adj, i, (i + 1) % k);
        }
        let anchors: Vec<usize> = (0..k)
            .step_by(2)
            .filter(|&i| !(k % 2 == 1 && i == k - 1))
            .collect();
        for w in k..n {
            for &a in &anchors {
                if rng.gen_bool(0.4) {
                    link(&mut adj, w, a);
                }
            }
            for v in w + 1..n {
                if rng.gen_bool(0.4) {
                    link(&mut adj, w, v);
                }
            }
        }
        out.extend(
            instances(&[Small { n, adj }])
                .into_iter()
                .filter(|i| cyclesplit::graph::splitting_condition(&i.graph, &i.cycle)),
        );
    }
    out
}
