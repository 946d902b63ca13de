//! Resolving sets and the exact dimension solvers.
//!
//! A metric representation of `v` against an ordered landmark set `W` is the
//! vector of distances to each landmark; the adjacency representation uses
//! 0 (equal), 1 (adjacent), 2 (non-adjacent) instead. `W` resolves the graph
//! when distinct vertices get distinct vectors. The solvers search subsets
//! in ascending cardinality and lexicographic order, so the reported witness
//! is always the lexicographically smallest optimum, and they never return
//! an approximation: graphs above the configured order cap are refused.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::twins::{twin_partition, TwinPartition};

/// Which representation the check or search runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    Metric,
    Adjacency,
}

/// A per-vertex fingerprint against an ordered landmark set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepVector {
    pub kind: RepKind,
    pub coords: Vec<u32>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResolvingError {
    #[error("metric resolving needs a connected graph; distances across components are undefined")]
    MetricOnDisconnected,
    #[error("dimension search is undefined on a single vertex")]
    TrivialOrder,
    #[error("order {order} exceeds the search cap {cap}; raise the cap for an exact answer")]
    CapExceeded { order: usize, cap: usize },
}

/// Order caps that keep the exhaustive searches honest. `search_order`
/// bounds plain dimension queries, `enumeration_order` bounds anything that
/// must visit an entire cardinality level (basis listings, classification).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchCaps {
    pub search_order: usize,
    pub enumeration_order: usize,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            search_order: 24,
            enumeration_order: 12,
        }
    }
}

/// Outcome of an exact dimension search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionResult {
    /// The dimension itself.
    pub value: usize,
    /// Lexicographically smallest optimal set.
    pub witness: VertexSet,
    /// Every optimal set, present when the search ran with `enumerate_all`.
    pub all_bases: Option<Vec<VertexSet>>,
}

fn adjacency_value(g: &Graph, v: usize, w: usize) -> u32 {
    if v == w {
        0
    } else if g.is_adjacent(v, w) {
        1
    } else {
        2
    }
}

/// Distance vector of `v` against the landmarks in `w`. Coordinates are
/// `DistanceMatrix::INFINITE` across components.
pub fn metric_representation(g: &Graph, v: usize, w: &VertexSet) -> RepVector {
    RepVector {
        kind: RepKind::Metric,
        coords: w.iter().map(|wi| g.distances().get(v, wi)).collect(),
    }
}

/// 0/1/2 vector of `v` against the landmarks in `w`.
pub fn adjacency_representation(g: &Graph, v: usize, w: &VertexSet) -> RepVector {
    RepVector {
        kind: RepKind::Adjacency,
        coords: w.iter().map(|wi| adjacency_value(g, v, wi)).collect(),
    }
}

pub fn representation(g: &Graph, v: usize, w: &VertexSet, kind: RepKind) -> RepVector {
    match kind {
        RepKind::Metric => metric_representation(g, v, w),
        RepKind::Adjacency => adjacency_representation(g, v, w),
    }
}

/// Does `w` give every vertex a distinct representation?
///
/// Landmarks are distinguished for free (each holds the unique 0 in its own
/// coordinate), so only the vertices outside `w` are compared. The empty set
/// therefore resolves exactly the one-vertex graph.
pub fn is_resolving(g: &Graph, w: &VertexSet, kind: RepKind) -> Result<bool, ResolvingError> {
    if kind == RepKind::Metric && !g.is_connected() {
        return Err(ResolvingError::MetricOnDisconnected);
    }
    let mut reps: Vec<Vec<u32>> = (0..g.order())
        .filter(|&v| !w.contains(v))
        .map(|v| representation(g, v, w, kind).coords)
        .collect();
    reps.sort_unstable();
    Ok(reps.windows(2).all(|pair| pair[0] != pair[1]))
}

/// Does `w` distinguish the vertices of `t` from each other?
pub fn resolves_subset(
    g: &Graph,
    w: &VertexSet,
    t: &VertexSet,
    kind: RepKind,
) -> Result<bool, ResolvingError> {
    if kind == RepKind::Metric && !g.is_connected() {
        return Err(ResolvingError::MetricOnDisconnected);
    }
    let mut reps: Vec<Vec<u32>> = t
        .iter()
        .map(|v| representation(g, v, w, kind).coords)
        .collect();
    reps.sort_unstable();
    Ok(reps.windows(2).all(|pair| pair[0] != pair[1]))
}

/// Lower bound on the dimension: every twin class of size `s` contributes
/// `s - 1` mandatory landmarks, and for the adjacency kind the `n - k`
/// non-landmarks only see coordinates in {1, 2}, so `2^k` must cover them.
pub fn lower_bound(g: &Graph, kind: RepKind) -> usize {
    lower_bound_from(g.order(), &twin_partition(g), kind)
}

fn lower_bound_from(n: usize, tp: &TwinPartition, kind: RepKind) -> usize {
    let twin = tp.twin_lower_bound();
    let coding = match kind {
        RepKind::Metric => 0,
        RepKind::Adjacency => {
            let mut k = 0usize;
            while (1usize << k) < n - k {
                k += 1;
            }
            k
        }
    };
    twin.max(coding).max(1)
}

/// Exact dimension of `g` for the chosen representation kind.
///
/// Searches nonempty subsets by ascending cardinality starting at
/// [`lower_bound`], with subsets missing two or more members of one twin
/// class pruned away. With `enumerate_all` the whole optimal cardinality
/// level is scanned (under the tighter enumeration cap) and every basis is
/// returned in lexicographic order.
pub fn dimension(
    g: &Graph,
    kind: RepKind,
    enumerate_all: bool,
    caps: &SearchCaps,
) -> Result<DimensionResult, ResolvingError> {
    let n = g.order();
    if n < 2 {
        return Err(ResolvingError::TrivialOrder);
    }
    if kind == RepKind::Metric && !g.is_connected() {
        return Err(ResolvingError::MetricOnDisconnected);
    }
    let cap = if enumerate_all {
        caps.enumeration_order
    } else {
        caps.search_order
    };
    if n > cap {
        return Err(ResolvingError::CapExceeded { order: n, cap });
    }

    let tp = twin_partition(g);
    let start = lower_bound_from(n, &tp, kind);
    let ctx = SolverCtx::new(g, kind, &tp);

    for size in start..n {
        let mut found: Vec<VertexSet> = Vec::new();
        let mut combos = Combinations::new(n, size);
        while let Some(subset) = combos.next() {
            if !ctx.twin_filter(subset) {
                continue;
            }
            if ctx.resolves(subset) {
                found.push(VertexSet::from_sorted(subset.to_vec()));
                if !enumerate_all {
                    break;
                }
            }
        }
        if let Some(first) = found.first() {
            return Ok(DimensionResult {
                value: size,
                witness: first.clone(),
                all_bases: enumerate_all.then_some(found),
            });
        }
    }

    // All n-1 other vertices as landmarks leave a single vertex to tell
    // apart, so the level n-1 always succeeds and the loop cannot fall
    // through.
    unreachable!("no resolving set of size {} found on order {}", n - 1, n);
}

/// Every adjacency basis of `g`, lexicographically ordered.
pub fn enumerate_adjacency_bases(
    g: &Graph,
    caps: &SearchCaps,
) -> Result<Vec<VertexSet>, ResolvingError> {
    let result = dimension(g, RepKind::Adjacency, true, caps)?;
    Ok(result.all_bases.expect("enumerating search returns all bases"))
}

/// Precomputed per-vertex landmark keys plus twin data for the subset scan.
struct SolverCtx<'a> {
    n: usize,
    keys: Vec<u16>,
    tp: &'a TwinPartition,
    prune: bool,
    bits: u32,
    class_counts: std::cell::RefCell<Vec<usize>>,
    scratch: std::cell::RefCell<Vec<u128>>,
    rows: std::cell::RefCell<Vec<Vec<u16>>>,
}

impl<'a> SolverCtx<'a> {
    fn new(g: &Graph, kind: RepKind, tp: &'a TwinPartition) -> SolverCtx<'a> {
        let n = g.order();
        let mut keys = vec![0u16; n * n];
        for v in 0..n {
            for w in 0..n {
                keys[v * n + w] = match kind {
                    RepKind::Metric => g.distances().get(v, w) as u16,
                    RepKind::Adjacency => adjacency_value(g, v, w) as u16,
                };
            }
        }
        // Packed 0/1/2 coordinates need 2 bits; distances on a connected
        // graph of order <= 32 fit in 5.
        let bits = match kind {
            RepKind::Adjacency => 2,
            RepKind::Metric => 5,
        };
        SolverCtx {
            n,
            keys,
            tp,
            prune: tp.has_twins(),
            bits,
            class_counts: std::cell::RefCell::new(vec![0; tp.iota()]),
            scratch: std::cell::RefCell::new(Vec::with_capacity(n)),
            rows: std::cell::RefCell::new(Vec::new()),
        }
    }

    /// False when the subset misses two or more members of one twin class
    /// and hence cannot resolve.
    fn twin_filter(&self, subset: &[usize]) -> bool {
        if !self.prune {
            return true;
        }
        let mut counts = self.class_counts.borrow_mut();
        for &v in subset {
            counts[self.tp.class_index(v)] += 1;
        }
        let ok = self
            .tp
            .classes()
            .iter()
            .enumerate()
            .all(|(i, class)| class.len() <= counts[i] + 1);
        for &v in subset {
            counts[self.tp.class_index(v)] = 0;
        }
        ok
    }

    fn resolves(&self, subset: &[usize]) -> bool {
        let k = subset.len();
        if (k as u32) * self.bits <= 128 && (self.bits != 5 || self.n <= 32) {
            self.resolves_packed(subset)
        } else {
            self.resolves_general(subset)
        }
    }

    /// Packs each outside vertex's representation into one integer, sorts,
    /// and scans for duplicates.
    fn resolves_packed(&self, subset: &[usize]) -> bool {
        let mut seen = self.scratch.borrow_mut();
        seen.clear();
        let mut next_landmark = 0;
        for v in 0..self.n {
            if next_landmark < subset.len() && subset[next_landmark] == v {
                next_landmark += 1;
                continue;
            }
            let mut key: u128 = 0;
            let row = &self.keys[v * self.n..(v + 1) * self.n];
            for (pos, &w) in subset.iter().enumerate() {
                key |= (row[w] as u128) << (self.bits * pos as u32);
            }
            seen.push(key);
        }
        seen.sort_unstable();
        seen.windows(2).all(|pair| pair[0] != pair[1])
    }

    /// Fallback for landmark sets too wide to pack.
    fn resolves_general(&self, subset: &[usize]) -> bool {
        let mut rows = self.rows.borrow_mut();
        rows.clear();
        let mut next_landmark = 0;
        for v in 0..self.n {
            if next_landmark < subset.len() && subset[next_landmark] == v {
                next_landmark += 1;
                continue;
            }
            let row = &self.keys[v * self.n..(v + 1) * self.n];
            rows.push(subset.iter().map(|&w| row[w]).collect());
        }
        rows.sort_unstable();
        rows.windows(2).all(|pair| pair[0] != pair[1])
    }
}

/// Lexicographic k-subsets of `0..n` without allocation per step.
struct Combinations {
    n: usize,
    indices: Vec<usize>,
    fresh: bool,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            indices: (0..k).collect(),
            fresh: true,
            done: k > n,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(&self.indices);
        }
        let k = self.indices.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.indices[i] != i + self.n - k {
                break;
            }
        }
        self.indices[i] += 1;
        for j in i + 1..k {
            self.indices[j] = self.indices[j - 1] + 1;
        }
        Some(&self.indices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn vs(members: &[usize]) -> VertexSet {
        VertexSet::from_unsorted(members.iter().copied())
    }

    #[test]
    fn metric_representation_examples() {
        // P_4 end against the opposite end.
        let p4 = Graph::path(4).unwrap();
        assert_eq!(metric_representation(&p4, 3, &vs(&[0])).coords, vec![3]);
        // A landmark carries exactly one zero, at its own position.
        let rep = metric_representation(&p4, 1, &vs(&[0, 1, 3]));
        assert_eq!(rep.coords.iter().filter(|&&c| c == 0).count(), 1);
        assert_eq!(rep.coords[1], 0);
        // C_6 with landmarks {0, 2}: vertex 3 reads (3, 1).
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(metric_representation(&c6, 3, &vs(&[0, 2])).coords, vec![3, 1]);
    }

    #[test]
    fn adjacency_representation_examples() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(adjacency_representation(&p3, 1, &vs(&[0])).coords, vec![1]);
        assert_eq!(adjacency_representation(&p3, 2, &vs(&[0])).coords, vec![2]);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(adjacency_representation(&c6, 4, &vs(&[0, 2])).coords, vec![2, 2]);
        assert_eq!(adjacency_representation(&c6, 5, &vs(&[0, 2])).coords, vec![1, 2]);
        assert_eq!(adjacency_representation(&c6, 0, &vs(&[0, 2])).coords, vec![0, 2]);
    }

    #[test]
    fn is_resolving_on_c6() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(is_resolving(&c6, &vs(&[0, 2]), RepKind::Adjacency).unwrap());
        // {0, 1} leaves vertices 3 and 4 both at (2, 2).
        assert!(!is_resolving(&c6, &vs(&[0, 1]), RepKind::Adjacency).unwrap());
    }

    #[test]
    fn path_end_resolves_metrically() {
        for n in 2..=9 {
            let p = Graph::path(n).unwrap();
            assert!(is_resolving(&p, &vs(&[0]), RepKind::Metric).unwrap());
        }
    }

    #[test]
    fn metric_check_rejects_disconnected() {
        let g = Graph::empty(3).unwrap();
        assert_eq!(
            is_resolving(&g, &vs(&[0]), RepKind::Metric),
            Err(ResolvingError::MetricOnDisconnected)
        );
        assert!(is_resolving(&g, &vs(&[0, 1]), RepKind::Adjacency).unwrap());
    }

    #[test]
    fn resolves_subset_examples() {
        let c6 = Graph::cycle(6).unwrap();
        // Singletons and the empty target are vacuously resolved.
        assert!(resolves_subset(&c6, &vs(&[0, 1]), &vs(&[4]), RepKind::Adjacency).unwrap());
        assert!(resolves_subset(&c6, &vs(&[0, 1]), &VertexSet::empty(), RepKind::Adjacency).unwrap());
        // Vertices 3 and 4 share the vector (2, 2) against {0, 1}.
        assert!(!resolves_subset(&c6, &vs(&[0, 1]), &vs(&[3, 4]), RepKind::Adjacency).unwrap());
        // A resolving set distinguishes every subset.
        assert!(resolves_subset(&c6, &vs(&[0, 2]), &vs(&[1, 3, 4, 5]), RepKind::Adjacency).unwrap());
    }

    #[test]
    fn empty_set_resolves_only_the_singleton_graph() {
        let k1 = Graph::complete(1).unwrap();
        assert!(is_resolving(&k1, &VertexSet::empty(), RepKind::Adjacency).unwrap());
        let k2 = Graph::complete(2).unwrap();
        assert!(!is_resolving(&k2, &VertexSet::empty(), RepKind::Adjacency).unwrap());
    }

    #[test]
    fn dimension_of_complete_graph() {
        let caps = SearchCaps::default();
        let res = dimension(&Graph::complete(5).unwrap(), RepKind::Metric, false, &caps).unwrap();
        assert_eq!(res.value, 4);
        assert_eq!(res.witness.members(), &[0, 1, 2, 3]);
    }

    #[test]
    fn dimension_adjacency_examples() {
        let caps = SearchCaps::default();
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(dimension(&c6, RepKind::Adjacency, false, &caps).unwrap().value, 2);
        assert_eq!(dimension(&c6, RepKind::Metric, false, &caps).unwrap().value, 2);
        let p4 = Graph::path(4).unwrap();
        assert_eq!(dimension(&p4, RepKind::Adjacency, false, &caps).unwrap().value, 2);
        let p7 = Graph::path(7).unwrap();
        assert_eq!(dimension(&p7, RepKind::Adjacency, false, &caps).unwrap().value, 3);
    }

    #[test]
    fn dimension_rejects_trivial_and_capped_input() {
        let caps = SearchCaps::default();
        assert_eq!(
            dimension(&Graph::complete(1).unwrap(), RepKind::Metric, false, &caps),
            Err(ResolvingError::TrivialOrder)
        );
        assert_eq!(
            dimension(&Graph::empty(4).unwrap(), RepKind::Metric, false, &caps),
            Err(ResolvingError::MetricOnDisconnected)
        );
        // The adjacency kind is fine with disconnected input.
        assert_eq!(
            dimension(&Graph::empty(4).unwrap(), RepKind::Adjacency, false, &caps)
                .unwrap()
                .value,
            3
        );
        let tight = SearchCaps { search_order: 4, enumeration_order: 4 };
        assert_eq!(
            dimension(&Graph::path(5).unwrap(), RepKind::Metric, false, &tight),
            Err(ResolvingError::CapExceeded { order: 5, cap: 4 })
        );
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        let caps = SearchCaps::default();
        let p7 = Graph::path(7).unwrap();
        let res = dimension(&p7, RepKind::Metric, false, &caps).unwrap();
        assert_eq!(res.value, 1);
        assert_eq!(res.witness.members(), &[0]);
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(&Graph::complete(6).unwrap(), RepKind::Metric), 5);
        assert_eq!(lower_bound(&Graph::path(7).unwrap(), RepKind::Adjacency), 3);
        assert_eq!(lower_bound(&Graph::path(7).unwrap(), RepKind::Metric), 1);
    }

    #[test]
    fn enumerate_bases_of_p3_and_k2() {
        let caps = SearchCaps::default();
        let p3 = Graph::path(3).unwrap();
        let bases = enumerate_adjacency_bases(&p3, &caps).unwrap();
        assert_eq!(bases, vec![vs(&[0]), vs(&[2])]);
        let k2 = Graph::complete(2).unwrap();
        let bases = enumerate_adjacency_bases(&k2, &caps).unwrap();
        assert_eq!(bases, vec![vs(&[0]), vs(&[1])]);
        let c6 = Graph::cycle(6).unwrap();
        let bases = enumerate_adjacency_bases(&c6, &caps).unwrap();
        assert!(bases.contains(&vs(&[0, 2])));
    }

    #[test]
    fn enumeration_respects_the_tighter_cap() {
        let caps = SearchCaps { search_order: 24, enumeration_order: 6 };
        let p7 = Graph::path(7).unwrap();
        assert_eq!(
            enumerate_adjacency_bases(&p7, &caps),
            Err(ResolvingError::CapExceeded { order: 7, cap: 6 })
        );
    }

    #[test]
    fn combinations_cover_the_level() {
        let mut combos = Combinations::new(5, 3);
        let mut count = 0;
        let mut last: Option<Vec<usize>> = None;
        while let Some(c) = combos.next() {
            if let Some(prev) = &last {
                assert!(prev.as_slice() < c);
            }
            last = Some(c.to_vec());
            count += 1;
        }
        assert_eq!(count, 10);
        assert_eq!(last.unwrap(), vec![2, 3, 4]);
    }
}
