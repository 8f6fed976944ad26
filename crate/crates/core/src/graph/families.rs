//! Named graph families: cycles, stars and wheels with rim `u1..un`, hub `w`.

use super::Graph;

fn rim(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("u{i}")).collect()
}

fn rim_edges(rim: &[String]) -> Vec<(String, String)> {
    let n = rim.len();
    (0..n)
        .map(|i| (rim[i].clone(), rim[(i + 1) % n].clone()))
        .collect()
}

/// The n-cycle `u1 - u2 - ... - un - u1`. Requires `n >= 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let r = rim(n);
    Graph::new(&r, rim_edges(&r)).expect("cycle graph is simple")
}

/// Hub `hub` joined to each leaf.
pub fn star_graph<S: AsRef<str>>(hub: &str, leaves: &[S]) -> Graph {
    let mut vertices: Vec<String> = leaves.iter().map(|l| l.as_ref().to_string()).collect();
    vertices.push(hub.to_string());
    let edges: Vec<(String, String)> = leaves
        .iter()
        .map(|l| (hub.to_string(), l.as_ref().to_string()))
        .collect();
    Graph::new(&vertices, edges).expect("star graph is simple")
}

/// The full wheel on `2k + 1` vertices: rim `u1..u2k` and hub `w` joined to
/// every rim vertex.
pub fn wheel_graph(k: usize) -> Graph {
    wheel_with_spokes(k, |_| true)
}

/// The wheel on `2k + 1` vertices with every other spoke missing: the hub
/// `w` is joined to `u2, u4, ..., u2k` only.
pub fn spoke_deleted_wheel(k: usize) -> Graph {
    wheel_with_spokes(k, |i| i % 2 == 0)
}

fn wheel_with_spokes(k: usize, spoke: impl Fn(usize) -> bool) -> Graph {
    assert!(k >= 2, "wheel rim needs at least 4 vertices");
    let r = rim(2 * k);
    let mut edges = rim_edges(&r);
    edges.extend(
        (1..=2 * k)
            .filter(|&i| spoke(i))
            .map(|i| ("w".to_string(), r[i - 1].clone())),
    );
    let mut vertices = r;
    vertices.push("w".into());
    Graph::new(&vertices, edges).expect("wheel is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(cycle_graph(6).edge_count(), 6);
        assert_eq!(wheel_graph(3).edge_count(), 12);
        assert_eq!(spoke_deleted_wheel(3).edge_count(), 9);
        assert_eq!(spoke_deleted_wheel(2).degree("u1").unwrap(), 2);
        assert_eq!(spoke_deleted_wheel(2).degree("u2").unwrap(), 3);
        assert_eq!(star_graph("w", &["u2", "u4"]).degree("w").unwrap(), 2);
    }
}
