use crate::graph::Graph;
use crate::monomial::{parse_monomial, Monomial};

pub(crate) fn m(s: &str) -> Monomial {
    parse_monomial(s).unwrap()
}

pub(crate) fn c4() -> Graph {
    Graph::from_edges(&[("u1", "u2"), ("u2", "u3"), ("u3", "u4"), ("u4", "u1")]).unwrap()
}

pub(crate) fn c4_pendant() -> Graph {
    Graph::from_edges(&[
        ("u1", "u2"),
        ("u2", "u3"),
        ("u3", "u4"),
        ("u4", "u1"),
        ("u1", "w"),
    ])
    .unwrap()
}

pub(crate) fn c4_with_outer_edge() -> Graph {
    Graph::new(
        ["u1", "u2", "u3", "u4", "w1", "w2"],
        [
            ("u1", "u2"),
            ("u2", "u3"),
            ("u3", "u4"),
            ("u4", "u1"),
            ("w1", "w2"),
        ],
    )
    .unwrap()
}

pub(crate) fn example1() -> Graph {
    Graph::from_edges(&[
        ("u1", "u2"),
        ("u2", "u3"),
        ("u3", "u4"),
        ("u4", "u1"),
        ("u1", "w1"),
        ("u2", "w1"),
    ])
    .unwrap()
}

pub(crate) fn example2() -> Graph {
    Graph::from_edges(&[
        ("u1", "u2"),
        ("u2", "u3"),
        ("u3", "u4"),
        ("u4", "u1"),
        ("u1", "w1"),
        ("u2", "w1"),
        ("u3", "w2"),
        ("u4", "w2"),
    ])
    .unwrap()
}
