//! Metric dimension of lexicographic products.
//!
//! For a connected base graph `G` of order `n >= 2` and an inner graph `H`
//! of order `m >= 2`, the dimension of `G[H]` is decided entirely by `n`,
//! the adjacency dimension of `H`, the twin-class counts of `G`, and which
//! of four shapes the adjacency bases of `H` take. A vertex whose adjacency
//! representation against a basis is all 1s (respectively all 2s) is what
//! obstructs the plain product bound, so the cases track whether such
//! vertices can be avoided:
//!
//! * both avoidable: some basis has no all-1 vertex and some basis has no
//!   all-2 vertex — dimension `n * b2(H)`;
//! * both forced: every basis has both — `n * (b2(H) + 1) - iota(G)`;
//! * all-1 forced, all-2 avoidable — `n * b2(H) + a(G) - iota_K(G)`;
//! * all-2 forced, all-1 avoidable — `n * b2(H) + b(G) - iota_N(G)`.
//!
//! Each case also carries an explicit resolving set of exactly that size,
//! built per row from the certifying bases. The degenerate inner order
//! `m = 1` collapses `G[H]` to `G` itself, where this machinery does not
//! apply; that product is solved directly by the exact search instead.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::resolving::{
    dimension, enumerate_adjacency_bases, RepKind, ResolvingError, SearchCaps,
};
use crate::twins::{twin_partition, TwinPartition, TwinType};

/// Which of the four basis shapes the inner graph falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductCase {
    /// Some basis avoids all-1 vertices and some basis avoids all-2.
    BothAvoidable,
    /// Every basis has an all-1 and an all-2 vertex.
    BothForced,
    /// Every basis has an all-1 vertex; some basis avoids all-2.
    AllOneForced,
    /// Every basis has an all-2 vertex; some basis avoids all-1.
    AllTwoForced,
}

impl ProductCase {
    pub fn as_str(self) -> &'static str {
        match self {
            ProductCase::BothAvoidable => "both-avoidable",
            ProductCase::BothForced => "both-forced",
            ProductCase::AllOneForced => "all-one-forced",
            ProductCase::AllTwoForced => "all-two-forced",
        }
    }
}

impl std::fmt::Display for ProductCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One adjacency basis of the inner graph together with its pathological
/// vertices, when they exist (smallest indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisProfile {
    pub basis: VertexSet,
    pub all_one_witness: Option<usize>,
    pub all_two_witness: Option<usize>,
}

impl BasisProfile {
    pub fn has_all_one(&self) -> bool {
        self.all_one_witness.is_some()
    }

    pub fn has_all_two(&self) -> bool {
        self.all_two_witness.is_some()
    }
}

/// Classification of an inner graph: its adjacency dimension, every basis
/// with its profile, the resulting case, and the bases the construction
/// uses (`chosen_w1` avoids all-1 where the case permits, `chosen_w2`
/// avoids all-2; they coincide when one basis certifies the case alone).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HClassification {
    pub beta2: usize,
    pub profiles: Vec<BasisProfile>,
    pub case: ProductCase,
    pub chosen_w1: VertexSet,
    pub chosen_w2: VertexSet,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LexError {
    #[error("the base graph of a lexicographic product must be connected")]
    DisconnectedBase,
    #[error(transparent)]
    Resolving(#[from] ResolvingError),
}

/// Result of the product dispatch. `classification` is absent exactly when
/// the inner graph has one vertex and the product was solved directly.
/// When `oracle_value` is present it was obtained by exact search on the
/// product and should always agree with `formula_value`.
#[derive(Clone, Debug)]
pub struct LexReport {
    pub base_order: usize,
    pub inner_order: usize,
    pub classification: Option<HClassification>,
    pub formula_value: usize,
    pub witness: VertexSet,
    pub oracle_value: Option<usize>,
    pub twin_stats: TwinPartition,
}

impl LexReport {
    /// The case tag, when the four-case dispatch ran.
    pub fn case(&self) -> Option<ProductCase> {
        self.classification.as_ref().map(|c| c.case)
    }

    /// False only when an oracle value is present and disagrees.
    pub fn oracle_agrees(&self) -> bool {
        self.oracle_value.is_none_or(|v| v == self.formula_value)
    }
}

/// Flat indices of the copy of the inner graph above base vertex `i`.
pub fn row(i: usize, inner_order: usize) -> VertexSet {
    VertexSet::from_sorted((i * inner_order..(i + 1) * inner_order).collect())
}

/// Inner-graph vertices that `s` hits within row `i`:
/// `{ j | i*m + j in s }`.
pub fn projection(s: &VertexSet, i: usize, inner_order: usize) -> VertexSet {
    VertexSet::from_sorted(
        s.iter()
            .filter(|&v| v / inner_order == i)
            .map(|v| v % inner_order)
            .collect(),
    )
}

fn profile_basis(h: &Graph, basis: &VertexSet) -> BasisProfile {
    let mut all_one = None;
    let mut all_two = None;
    for v in 0..h.order() {
        if basis.contains(v) {
            continue;
        }
        if all_one.is_none() && basis.iter().all(|w| h.is_adjacent(v, w)) {
            all_one = Some(v);
        }
        if all_two.is_none() && basis.iter().all(|w| !h.is_adjacent(v, w)) {
            all_two = Some(v);
        }
    }
    BasisProfile {
        basis: basis.clone(),
        all_one_witness: all_one,
        all_two_witness: all_two,
    }
}

/// Enumerates every adjacency basis of `h`, profiles each for all-1 and
/// all-2 vertices, and picks the case. Needs `h` of order at least 2 and
/// within the enumeration cap.
pub fn classify(h: &Graph, caps: &SearchCaps) -> Result<HClassification, ResolvingError> {
    let bases = enumerate_adjacency_bases(h, caps)?;
    let profiles: Vec<BasisProfile> = bases.iter().map(|b| profile_basis(h, b)).collect();

    let missing_one = |p: &&BasisProfile| !p.has_all_one();
    let missing_two = |p: &&BasisProfile| !p.has_all_two();
    let some_without_one = profiles.iter().find(missing_one);
    let some_without_two = profiles.iter().find(missing_two);

    let (case, w1, w2) = match (some_without_one, some_without_two) {
        (Some(p1), Some(p2)) => (ProductCase::BothAvoidable, p1, p2),
        (None, None) => (ProductCase::BothForced, &profiles[0], &profiles[0]),
        (None, Some(p2)) => (ProductCase::AllOneForced, p2, p2),
        (Some(p1), None) => (ProductCase::AllTwoForced, p1, p1),
    };
    let (chosen_w1, chosen_w2) = (w1.basis.clone(), w2.basis.clone());

    Ok(HClassification {
        beta2: bases[0].len(),
        profiles,
        case,
        chosen_w1,
        chosen_w2,
    })
}

fn formula_value(n: usize, cls: &HClassification, tp: &TwinPartition) -> usize {
    match cls.case {
        ProductCase::BothAvoidable => n * cls.beta2,
        ProductCase::BothForced => n * (cls.beta2 + 1) - tp.iota(),
        ProductCase::AllOneForced => n * cls.beta2 + tp.a() - tp.iota_k(),
        ProductCase::AllTwoForced => n * cls.beta2 + tp.b() - tp.iota_n(),
    }
}

/// Builds the explicit resolving set of `g[h]` whose size matches the case
/// formula, as flat product indices.
///
/// Rows over vertices with adjacent twins take the all-1-free basis, the
/// remaining rows take the all-2-free basis. Where a pathological vertex is
/// forced, its column is added on every non-representative member of each
/// affected twin class (clique classes get the all-1 column, independent
/// classes the all-2 column); representatives are the smallest member of
/// each class.
pub fn construct_witness(g: &Graph, h: &Graph, cls: &HClassification) -> VertexSet {
    let n = g.order();
    let m = h.order();
    let tp = twin_partition(g);
    let mut flat: Vec<usize> = Vec::new();

    match cls.case {
        ProductCase::BothAvoidable => {
            for i in 0..n {
                let basis = if tp.k_vertices().contains(i) {
                    &cls.chosen_w1
                } else {
                    &cls.chosen_w2
                };
                flat.extend(basis.iter().map(|j| i * m + j));
            }
        }
        ProductCase::BothForced | ProductCase::AllOneForced | ProductCase::AllTwoForced => {
            // One shared basis everywhere (chosen_w1 == chosen_w2 here).
            let basis = &cls.chosen_w1;
            for i in 0..n {
                flat.extend(basis.iter().map(|j| i * m + j));
            }
            let profile = cls
                .profiles
                .iter()
                .find(|p| &p.basis == basis)
                .expect("chosen basis comes from the profile list");
            let patch_kinds: &[(TwinType, Option<usize>)] = match cls.case {
                ProductCase::BothForced => &[
                    (TwinType::Clique, profile.all_one_witness),
                    (TwinType::Independent, profile.all_two_witness),
                ],
                ProductCase::AllOneForced => &[(TwinType::Clique, profile.all_one_witness)],
                ProductCase::AllTwoForced => &[(TwinType::Independent, profile.all_two_witness)],
                ProductCase::BothAvoidable => unreachable!(),
            };
            for &(kind, column) in patch_kinds {
                let column = column.expect("case guarantees the pathological vertex exists");
                for (class, &k) in tp.classes().iter().zip(tp.kinds()) {
                    if k != kind {
                        continue;
                    }
                    for t in class.iter().skip(1) {
                        flat.push(t * m + column);
                    }
                }
            }
        }
    }

    VertexSet::from_unsorted(flat)
}

/// Options for [`lex_dimension`].
#[derive(Clone, Copy, Debug, Default)]
pub struct LexOptions {
    /// Also solve the product exactly and record the value next to the
    /// formula.
    pub verify: bool,
    pub caps: SearchCaps,
}

/// Dimension of the lexicographic product `g[h]`.
///
/// `g` must be connected. For a single-vertex `g` the product is a copy of
/// `h`, and for a single-vertex `h` it is a copy of `g`; both degenerate
/// products are solved by exact search. Everything else goes through
/// [`classify`] and the case formulas, with [`construct_witness`] providing
/// the certificate. With `verify`, the product is additionally solved
/// exactly when it fits the search cap; an over-cap product simply leaves
/// `oracle_value` empty.
pub fn lex_dimension(g: &Graph, h: &Graph, opts: &LexOptions) -> Result<LexReport, LexError> {
    if !g.is_connected() {
        return Err(LexError::DisconnectedBase);
    }
    let n = g.order();
    let m = h.order();

    if n == 1 || m == 1 {
        let product = g.lex_product(h);
        let solved = dimension(&product, RepKind::Metric, false, &opts.caps)?;
        return Ok(LexReport {
            base_order: n,
            inner_order: m,
            classification: None,
            formula_value: solved.value,
            witness: solved.witness,
            oracle_value: opts.verify.then_some(solved.value),
            twin_stats: twin_partition(g),
        });
    }

    let cls = classify(h, &opts.caps)?;
    let tp = twin_partition(g);
    let value = formula_value(n, &cls, &tp);
    let witness = construct_witness(g, h, &cls);

    let oracle_value = if opts.verify && n * m <= opts.caps.search_order {
        let product = g.lex_product(h);
        Some(dimension(&product, RepKind::Metric, false, &opts.caps)?.value)
    } else {
        None
    };

    Ok(LexReport {
        base_order: n,
        inner_order: m,
        classification: Some(cls),
        formula_value: value,
        witness,
        oracle_value,
        twin_stats: tp,
    })
}

// ---------------------------------------------------------------------------
// closed forms

/// Closed-form dimension queries with their exact validity ranges;
/// out-of-range parameters are refused rather than extrapolated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedFormQuery {
    /// Metric dimension of a path, `n >= 2`: always 1.
    PathMetricDim { n: usize },
    /// Metric dimension of a complete graph, `n >= 2`: `n - 1`.
    CompleteMetricDim { n: usize },
    /// Adjacency dimension of a path, `n >= 4`: `floor((2n+2)/5)`.
    PathAdjacencyDim { n: usize },
    /// Adjacency dimension of a cycle, `n >= 4`: `floor((2n+2)/5)`.
    CycleAdjacencyDim { n: usize },
    /// Metric (= adjacency) dimension of a complete multipartite graph with
    /// at least two parts: `m - r - 1` when some part is a singleton,
    /// `m - r` otherwise, with `r` the number of parts of size >= 2.
    MultipartiteDim { parts: Vec<usize> },
    /// Metric dimension of a wheel, `n >= 4` and `n != 6`:
    /// `floor((2n+2)/5)`.
    WheelDim { n: usize },
    /// Metric dimension of a fan, `n >= 4` and `n != 6`:
    /// `floor((2n+2)/5)`.
    FanDim { n: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("formula not applicable: {reason}")]
pub struct FormulaRangeError {
    pub reason: String,
}

fn out_of_range(reason: impl Into<String>) -> FormulaRangeError {
    FormulaRangeError {
        reason: reason.into(),
    }
}

/// Evaluates a closed-form query.
pub fn closed_form(query: &ClosedFormQuery) -> Result<usize, FormulaRangeError> {
    match query {
        ClosedFormQuery::PathMetricDim { n } => {
            if *n < 2 {
                return Err(out_of_range("path metric dimension needs n >= 2"));
            }
            Ok(1)
        }
        ClosedFormQuery::CompleteMetricDim { n } => {
            if *n < 2 {
                return Err(out_of_range("complete-graph metric dimension needs n >= 2"));
            }
            Ok(n - 1)
        }
        ClosedFormQuery::PathAdjacencyDim { n } | ClosedFormQuery::CycleAdjacencyDim { n } => {
            if *n < 4 {
                return Err(out_of_range(
                    "the floor((2n+2)/5) adjacency form needs n >= 4",
                ));
            }
            Ok((2 * n + 2) / 5)
        }
        ClosedFormQuery::MultipartiteDim { parts } => {
            if parts.len() < 2 || parts.contains(&0) {
                return Err(out_of_range(
                    "complete multipartite form needs at least two nonempty parts",
                ));
            }
            let m: usize = parts.iter().sum();
            let r = parts.iter().filter(|&&p| p >= 2).count();
            let t = parts.len();
            Ok(if r == t { m - r } else { m - r - 1 })
        }
        ClosedFormQuery::WheelDim { n } => {
            if *n < 4 || *n == 6 {
                return Err(out_of_range("wheel form holds for n >= 4, n != 6"));
            }
            Ok((2 * n + 2) / 5)
        }
        ClosedFormQuery::FanDim { n } => {
            if *n < 4 || *n == 6 {
                return Err(out_of_range("fan form holds for n >= 4, n != 6"));
            }
            Ok((2 * n + 2) / 5)
        }
    }
}
