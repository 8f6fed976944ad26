use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CyclePartition, Edge, Graph};
use crate::monomial::{minimalize, Monomial, MonomialIdeal};

/// The generators of `J ∩ K` sorted into the three shapes that occur for a
/// chordless cycle:
///
/// * `a`: `u_i u_{i+1} w_p` where `w_p` is adjacent to `u_i` or `u_{i+1}`,
/// * `b`: `u_i u_{i+1} u_j w_p` from a crossing edge `u_j w_p` away from
///   the cycle edge, not a multiple of anything in `a`,
/// * `c`: `u_i u_{i+1} w_p w_q` from an outside edge, not a multiple of
///   anything in `a`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AbcDecomposition {
    pub a: BTreeSet<Monomial>,
    pub b: BTreeSet<Monomial>,
    pub c: BTreeSet<Monomial>,
}

impl AbcDecomposition {
    pub fn len(&self) -> usize {
        self.a.len() + self.b.len() + self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `a ∪ b ∪ c` as a set.
    pub fn flatten(&self) -> BTreeSet<Monomial> {
        self.a
            .iter()
            .chain(&self.b)
            .chain(&self.c)
            .cloned()
            .collect()
    }

    pub fn is_disjoint(&self) -> bool {
        self.a.is_disjoint(&self.b) && self.a.is_disjoint(&self.c) && self.b.is_disjoint(&self.c)
    }
}

pub(crate) fn edge_monomial(g: &Graph, (a, b): Edge) -> Monomial {
    Monomial::new([g.name(a), g.name(b)])
}

fn ideal_of(g: &Graph, edges: impl Iterator<Item = Edge>) -> MonomialIdeal {
    minimalize(edges.map(|e| edge_monomial(g, e)))
}

/// `J`: the edge ideal of the cycle.
pub fn cycle_ideal(g: &Graph, cp: &CyclePartition) -> MonomialIdeal {
    ideal_of(g, cp.eu().iter().copied())
}

/// `K`: the edge ideal of the cycle complement.
pub fn complement_ideal(g: &Graph, cp: &CyclePartition) -> MonomialIdeal {
    ideal_of(g, cp.ew().iter().chain(cp.ex()).copied())
}

/// Re-derives the partition from `g` so a partition built for another graph
/// is caught before the shape analysis relies on it.
pub(crate) fn check_partition(g: &Graph, cp: &CyclePartition) -> Result<()> {
    let fresh = crate::graph::make_cycle_partition(g, cp.cycle_names())?;
    if &fresh != cp {
        return Err(Error::NotACycle(
            "partition does not belong to this graph".into(),
        ));
    }
    Ok(())
}

/// Builds `A`, `B` and `C` by elimination: form the products of cycle edges
/// with crossing and outside edges, keep the degree-3 ones as `A`, then drop
/// every degree-4 product that is a multiple of some element of `A`.
pub fn abc_decomposition(g: &Graph, cp: &CyclePartition) -> Result<AbcDecomposition> {
    check_partition(g, cp)?;
    let k = cp.k();
    let mut a = BTreeSet::new();
    let mut cross_products = Vec::new();
    for i in 0..k {
        let (ui, uj) = cp.cycle_edge(i);
        let cyc = edge_monomial(g, (ui, uj));
        for &(x, y) in cp.ex() {
            let on_cycle = if cp.position(x).is_some() { x } else { y };
            let m = cyc.lcm(&edge_monomial(g, (x, y)));
            if on_cycle == ui || on_cycle == uj {
                a.insert(m);
            } else {
                cross_products.push(m);
            }
        }
    }
    let in_a = |m: &Monomial| a.iter().any(|d| d.divides(m));

    let b: BTreeSet<Monomial> = cross_products.into_iter().filter(|m| !in_a(m)).collect();
    let mut c = BTreeSet::new();
    for i in 0..k {
        let cyc = edge_monomial(g, cp.cycle_edge(i));
        for &e in cp.ew() {
            let m = cyc.lcm(&edge_monomial(g, e));
            if !in_a(&m) {
                c.insert(m);
            }
        }
    }
    Ok(AbcDecomposition { a, b, c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{induced_chordless_cycles, make_cycle_partition};
    use crate::monomial::intersect;
    use crate::testutil::{c4_with_outer_edge, example1, example2, m};

    fn set(ms: &[&str]) -> BTreeSet<Monomial> {
        ms.iter().map(|s| m(s)).collect()
    }

    #[test]
    fn first_example_is_all_a() {
        let g = example1();
        let cp = &induced_chordless_cycles(&g, 4)[0];
        let abc = abc_decomposition(&g, cp).unwrap();
        assert_eq!(abc.a, set(&["u1*u2*w1", "u2*u3*w1", "u1*u4*w1"]));
        assert!(abc.b.is_empty() && abc.c.is_empty());
    }

    #[test]
    fn second_example_has_six_a_elements() {
        let g = example2();
        let cp = &induced_chordless_cycles(&g, 4)[0];
        let abc = abc_decomposition(&g, cp).unwrap();
        assert_eq!(abc.a.len(), 6);
        assert!(abc.b.is_empty() && abc.c.is_empty());
        let jk = intersect(&cycle_ideal(&g, cp), &complement_ideal(&g, cp));
        assert_eq!(abc.flatten(), jk.generators().iter().cloned().collect());
    }

    #[test]
    fn outer_edge_gives_only_c() {
        let g = c4_with_outer_edge();
        let cp = make_cycle_partition(&g, &["u1", "u2", "u3", "u4"]).unwrap();
        let abc = abc_decomposition(&g, &cp).unwrap();
        assert!(abc.a.is_empty() && abc.b.is_empty());
        assert_eq!(
            abc.c,
            set(&["u1*u2*w1*w2", "u2*u3*w1*w2", "u3*u4*w1*w2", "u1*u4*w1*w2"])
        );
    }

    #[test]
    fn b_shape_on_a_hexagon() {
        // hexagon with a pendant at u1: the cycle edges u3u4 and u4u5 miss
        // u1 entirely, so their products with u1*w land in B
        let g = Graph::from_edges(&[
            ("u1", "u2"),
            ("u2", "u3"),
            ("u3", "u4"),
            ("u4", "u5"),
            ("u5", "u6"),
            ("u6", "u1"),
            ("u1", "w"),
        ])
        .unwrap();
        let cp = make_cycle_partition(&g, &["u1", "u2", "u3", "u4", "u5", "u6"]).unwrap();
        let abc = abc_decomposition(&g, &cp).unwrap();
        assert_eq!(abc.a, set(&["u1*u2*w", "u1*u6*w"]));
        assert_eq!(abc.b, set(&["u1*u3*u4*w", "u1*u4*u5*w"]));
        assert!(abc.c.is_empty());
        let jk = intersect(&cycle_ideal(&g, &cp), &complement_ideal(&g, &cp));
        assert_eq!(abc.flatten(), jk.generators().iter().cloned().collect());
    }

    #[test]
    fn foreign_partition_is_rejected() {
        let g = example2();
        let cp = &induced_chordless_cycles(&g, 4)[0];
        assert!(abc_decomposition(&example1(), cp).is_err());
    }
}
