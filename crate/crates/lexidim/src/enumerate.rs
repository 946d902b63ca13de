//! Exhaustive enumeration of small labeled graphs and integer partitions,
//! shared by the survey command and the verification suites.

use crate::graph::Graph;

/// Upper-triangle vertex pairs of `0..n` in a fixed order, one per
/// potential edge.
fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for v in 0..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Number of labeled graphs on `n` vertices: `2^(n choose 2)`.
pub fn labeled_count(n: usize) -> u64 {
    assert!(n >= 1, "labeled enumeration needs at least one vertex");
    assert!(n <= 11, "labeled enumeration above order 11 is not supported");
    1 << (n * (n - 1) / 2)
}

/// The labeled graph on `n` vertices whose edges are the set bits of
/// `mask`, bit `b` standing for the `b`-th upper-triangle pair in column
/// order.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let pairs = pair_list(n);
    assert!(mask < labeled_count(n));
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(bit, _)| mask >> bit & 1 == 1)
        .map(|(_, &pair)| pair)
        .collect();
    Graph::from_edges(n, &edges).expect("enumerated edges are valid")
}

/// All `2^(n choose 2)` labeled graphs on `n >= 1` vertices, in edge-mask
/// order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..labeled_count(n)).map(move |mask| labeled_graph(n, mask))
}

/// The connected members of [`labeled_graphs`].
pub fn connected_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    labeled_graphs(n).filter(|g| g.is_connected())
}

/// Integer partitions of `total` into parts of size at least 1, each
/// partition non-increasing, in lexicographically decreasing order.
pub fn partitions(total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            recurse(remaining - part, part, current, out);
            current.pop();
        }
    }
    recurse(total, total, &mut current, &mut out);
    out
}
