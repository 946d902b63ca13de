//! Twin vertices and their equivalence classes.
//!
//! Two distinct vertices are twins when their neighborhoods agree outside
//! the pair itself. Every class of the induced equivalence is a clique or
//! an independent set; the partition carries the counts the product
//! formulas consume.

use crate::graph::{Graph, VertexSet};

/// Kind of a twin class: a singleton, a clique of mutually adjacent twins,
/// or an independent set of mutually non-adjacent twins.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinType {
    Single,
    Clique,
    Independent,
}

/// The twin-class partition of a graph together with its derived counts.
#[derive(Clone, Debug)]
pub struct TwinPartition {
    classes: Vec<VertexSet>,
    kinds: Vec<TwinType>,
    class_of: Vec<usize>,
    a: usize,
    b: usize,
    iota_k: usize,
    iota_n: usize,
    k_vertices: VertexSet,
    n_vertices: VertexSet,
}

/// True iff `N(u) \ {v} = N(v) \ {u}`.
pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    assert!(u != v, "twin relation is defined on distinct vertices");
    let mut left = g.neighbors(u).filter(|&x| x != v);
    let mut right = g.neighbors(v).filter(|&x| x != u);
    loop {
        match (left.next(), right.next()) {
            (None, None) => return true,
            (Some(a), Some(b)) if a == b => continue,
            _ => return false,
        }
    }
}

/// Groups the vertices into twin classes.
///
/// Classes come from the transitive closure of the pairwise relation, not
/// from a grouping key, and each class is then verified to be a clique or
/// an independent set. A mixed class would contradict the relation being a
/// well-behaved equivalence, so it panics instead of being tagged
/// arbitrarily.
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for v in 0..n {
        for u in 0..v {
            if are_twins(g, u, v) {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[rv.max(ru)] = ru.min(rv);
                }
            }
        }
    }

    let mut grouped: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let root = find(&mut parent, v);
        grouped[root].push(v);
    }
    // Root of each class is its smallest member, so filtering empties keeps
    // the classes ordered by smallest member.
    let classes: Vec<VertexSet> = grouped
        .into_iter()
        .filter(|c| !c.is_empty())
        .map(VertexSet::from_sorted)
        .collect();

    let mut kinds = Vec::with_capacity(classes.len());
    for class in &classes {
        kinds.push(classify_class(g, class));
    }

    let mut class_of = vec![0; n];
    for (idx, class) in classes.iter().enumerate() {
        for v in class.iter() {
            class_of[v] = idx;
        }
    }

    let mut a = 0;
    let mut b = 0;
    let mut iota_k = 0;
    let mut iota_n = 0;
    let mut k_vertices = Vec::new();
    let mut n_vertices = Vec::new();
    for (class, kind) in classes.iter().zip(&kinds) {
        match kind {
            TwinType::Single => {}
            TwinType::Clique => {
                a += class.len();
                iota_k += 1;
                k_vertices.extend(class.iter());
            }
            TwinType::Independent => {
                b += class.len();
                iota_n += 1;
                n_vertices.extend(class.iter());
            }
        }
    }

    TwinPartition {
        classes,
        kinds,
        class_of,
        a,
        b,
        iota_k,
        iota_n,
        k_vertices: VertexSet::from_unsorted(k_vertices),
        n_vertices: VertexSet::from_unsorted(n_vertices),
    }
}

fn classify_class(g: &Graph, class: &VertexSet) -> TwinType {
    if class.len() == 1 {
        return TwinType::Single;
    }
    let members = class.members();
    let mut all_adjacent = true;
    let mut none_adjacent = true;
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if g.is_adjacent(u, v) {
                none_adjacent = false;
            } else {
                all_adjacent = false;
            }
        }
    }
    match (all_adjacent, none_adjacent) {
        (true, false) => TwinType::Clique,
        (false, true) => TwinType::Independent,
        _ => panic!("twin class {class} is neither a clique nor an independent set"),
    }
}

impl TwinPartition {
    /// Classes ordered by smallest member.
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn kinds(&self) -> &[TwinType] {
        &self.kinds
    }

    /// Index of the class containing `v`.
    pub fn class_index(&self, v: usize) -> usize {
        self.class_of[v]
    }

    /// Number of twin classes.
    pub fn iota(&self) -> usize {
        self.classes.len()
    }

    /// Number of clique classes.
    pub fn iota_k(&self) -> usize {
        self.iota_k
    }

    /// Number of independent classes.
    pub fn iota_n(&self) -> usize {
        self.iota_n
    }

    /// Vertices living in clique classes.
    pub fn a(&self) -> usize {
        self.a
    }

    /// Vertices living in independent classes.
    pub fn b(&self) -> usize {
        self.b
    }

    /// Union of the clique classes.
    pub fn k_vertices(&self) -> &VertexSet {
        &self.k_vertices
    }

    /// Union of the independent classes.
    pub fn n_vertices(&self) -> &VertexSet {
        &self.n_vertices
    }

    pub fn has_twins(&self) -> bool {
        self.iota() < self.class_of.len()
    }

    /// Sum of `size - 1` over all classes; no resolving set of either kind
    /// can miss two vertices of one class.
    pub fn twin_lower_bound(&self) -> usize {
        self.classes.iter().map(|c| c.len() - 1).sum()
    }
}
