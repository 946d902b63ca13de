//! Finite simple undirected graphs with eagerly cached all-pairs distances.
//!
//! Everything downstream (twin classes, resolving sets, product formulas)
//! reads the distance cache, so a [`Graph`] is immutable once built: every
//! constructor validates its input, symmetrizes the adjacency and runs a
//! BFS from each vertex before handing the value out.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Errors raised while building a graph.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    EmptyOrder,
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("cycle requires at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("complete multipartite graph requires at least one part, every part nonempty")]
    BadPartition,
    #[error("expected {expected} labels for order {order}")]
    LabelCountMismatch { expected: usize, order: usize },
}

/// Hop-count distance between every vertex pair, [`DistanceMatrix::INFINITE`]
/// across components.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    /// Sentinel for unreachable pairs.
    pub const INFINITE: u32 = u32::MAX;

    fn compute(adj: &[BTreeSet<usize>]) -> Self {
        let order = adj.len();
        let mut entries = vec![Self::INFINITE; order * order];
        let mut queue = VecDeque::new();
        for source in 0..order {
            let row = &mut entries[source * order..(source + 1) * order];
            row[source] = 0;
            queue.clear();
            queue.push_back(source);
            while let Some(v) = queue.pop_front() {
                let next = row[v] + 1;
                for &w in &adj[v] {
                    if row[w] == Self::INFINITE {
                        row[w] = next;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Distance between `u` and `v`; `INFINITE` when they sit in different
    /// components.
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.entries[u * self.order + v]
    }

    pub fn is_finite(&self, u: usize, v: usize) -> bool {
        self.get(u, v) != Self::INFINITE
    }

    /// Largest finite distance, or `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut max = 0;
        for &d in &self.entries {
            if d == Self::INFINITE {
                return None;
            }
            max = max.max(d);
        }
        Some(max)
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DistanceMatrix(order={})", self.order)
    }
}

/// An ordered vertex subset: landmark sets, twin classes, witnesses.
///
/// Members are kept strictly increasing, so `Ord` on the underlying vector
/// is the lexicographic order the solvers use for tie-breaking.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet::default()
    }

    /// Builds a set from arbitrary input, sorting and deduplicating.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    /// Wraps a vector that is already strictly increasing.
    pub fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Named graph family, matching the `family(...)` constructors one to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteMultipartite(Vec<usize>),
    Wheel(usize),
    Fan(usize),
}

impl Family {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            Family::Path(n) => Graph::path(*n),
            Family::Cycle(n) => Graph::cycle(*n),
            Family::Complete(n) => Graph::complete(*n),
            Family::Empty(n) => Graph::empty(*n),
            Family::CompleteMultipartite(parts) => Graph::complete_multipartite(parts),
            Family::Wheel(n) => Graph::wheel(*n),
            Family::Fan(n) => Graph::fan(*n),
        }
    }
}

/// Immutable simple undirected graph on vertices `0..order`.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    labels: Option<Vec<String>>,
    dist: DistanceMatrix,
}

impl Graph {
    fn assemble(adj: Vec<BTreeSet<usize>>, labels: Option<Vec<String>>) -> Graph {
        let dist = DistanceMatrix::compute(&adj);
        Graph { adj, labels, dist }
    }

    /// Builds a graph from an explicit edge list. Edges are deduplicated and
    /// symmetrized; out-of-range endpoints and self-loops are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if order == 0 {
            return Err(GraphError::EmptyOrder);
        }
        let mut adj = vec![BTreeSet::new(); order];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::assemble(adj, None))
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooShort(n));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, &[])
    }

    /// Complete multipartite graph; parts occupy contiguous index blocks in
    /// the order given.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(GraphError::BadPartition);
        }
        let order: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(order);
        for (idx, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(idx, size));
        }
        let mut edges = Vec::new();
        for v in 0..order {
            for u in 0..v {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(order, &edges)
    }

    /// Cycle joined with one hub vertex; the hub gets the last index.
    pub fn wheel(n: usize) -> Result<Graph, GraphError> {
        Ok(Graph::cycle(n)?.join(&Graph::complete(1)?))
    }

    /// Path joined with one hub vertex; the hub gets the last index.
    pub fn fan(n: usize) -> Result<Graph, GraphError> {
        Ok(Graph::path(n)?.join(&Graph::complete(1)?))
    }

    /// Attaches display names; purely cosmetic, ignored by equality.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::LabelCountMismatch {
                expected: labels.len(),
                order: self.order(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.order() {
            for &u in &self.adj[v] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The cached all-pairs BFS distances.
    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn is_connected(&self) -> bool {
        (0..self.order()).all(|v| self.dist.is_finite(0, v))
    }

    pub fn diameter(&self) -> Option<u32> {
        self.dist.diameter()
    }

    /// Complement: `u ~ v` in the result iff `u != v` and `u !~ v` here.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut adj = vec![BTreeSet::new(); n];
        for (v, row) in adj.iter_mut().enumerate() {
            for u in 0..n {
                if u != v && !self.is_adjacent(u, v) {
                    row.insert(u);
                }
            }
        }
        Graph::assemble(adj, None)
    }

    /// Disjoint union plus every edge between the two sides. `self` keeps
    /// indices `0..n`, `other` is shifted to `n..n+m`.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.order();
        let m = other.order();
        let mut adj = vec![BTreeSet::new(); n + m];
        adj[..n].clone_from_slice(&self.adj);
        for v in 0..m {
            adj[n + v] = other.adj[v].iter().map(|&u| n + u).collect();
        }
        for v in 0..n {
            for u in 0..m {
                adj[v].insert(n + u);
                adj[n + u].insert(v);
            }
        }
        Graph::assemble(adj, None)
    }

    /// Lexicographic product. Vertex `(i, j)` sits at flat index `i*m + j`
    /// where `m = other.order()`, so the copy of `other` above vertex `i`
    /// is the contiguous block `i*m..(i+1)*m`. `(i, j) ~ (r, s)` iff
    /// `i ~ r`, or `i = r` and `j ~ s`.
    pub fn lex_product(&self, other: &Graph) -> Graph {
        let n = self.order();
        let m = other.order();
        let mut adj = vec![BTreeSet::new(); n * m];
        for i in 0..n {
            for j in 0..m {
                let x = i * m + j;
                for &s in &other.adj[j] {
                    adj[x].insert(i * m + s);
                }
                for &r in &self.adj[i] {
                    for s in 0..m {
                        adj[x].insert(r * m + s);
                    }
                }
            }
        }
        Graph::assemble(adj, None)
    }
}

/// Structural equality on order and adjacency; labels are display metadata.
impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order(), self.edges())
    }
}
