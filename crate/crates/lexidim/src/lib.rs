//! Exact metric dimension and adjacency metric dimension of small graphs.
//!
//! The crate builds finite simple graphs (named families, complement, join,
//! lexicographic product, three text formats), computes their twin-class
//! structure, and solves resolving-set problems exactly by capped exhaustive
//! search. On top of that sits a closed-form dispatch that reads off the
//! metric dimension of a lexicographic product `G[H]` from the order of `G`,
//! its twin counts, and the shape of the adjacency bases of `H`, together
//! with an explicit witness set and an optional brute-force cross-check.

#![forbid(unsafe_code)]

pub mod cli;
pub mod enumerate;
pub mod format;
pub mod graph;
pub mod product;
pub mod resolving;
pub mod twins;

pub use graph::{DistanceMatrix, Family, Graph, GraphError, VertexSet};
pub use product::{
    classify, closed_form, construct_witness, lex_dimension, projection, row, BasisProfile,
    ClosedFormQuery, FormulaRangeError, HClassification, LexError, LexOptions, LexReport,
    ProductCase,
};
pub use resolving::{
    adjacency_representation, dimension, enumerate_adjacency_bases, is_resolving, lower_bound,
    metric_representation, representation, resolves_subset, DimensionResult, RepKind, RepVector,
    ResolvingError, SearchCaps,
};
pub use twins::{are_twins, twin_partition, TwinPartition, TwinType};
