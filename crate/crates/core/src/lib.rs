//! Berge copies of small graph patterns inside hypergraphs: detection with
//! verifiable witnesses, shadow-edge classification, extremal lower-bound
//! constructions, exact search for maximum Berge-free families, and
//! rational-arithmetic bound reports.
//!
//! A Berge copy of a pattern F is an injective placement of the vertices of
//! F plus an injective map from the edges of F to hyperedges, where each
//! pattern edge lands inside its assigned hyperedge. Detection therefore
//! couples subgraph embedding in the shadow graph with a bipartite matching
//! between pattern edges and hyperedges; both halves live in [`berge`].

pub mod berge;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod patterns;

pub mod extremal;

pub use berge::{
    certify_core, find_berge_copy, find_book_of_cores, find_fan_of_cores, verify_witness,
    BergeWitness, BookOfCores, FanOfCores,
};
pub use classify::{EdgeClassification, HyperedgePartition, Part, ShadowColoring};
pub use constructions::{
    construction1, construction2, construction3, construction4, construction5, ConstructionSpec,
};
pub use error::{Error, Result};
pub use extremal::{
    bena_rhs, brute_gen_turan, brute_turan, check_fre_bound, check_sandwich, exact_berge_turan,
    pattern_weight, weighted_sums, BoundParams, BoundReport, Rational, SearchResult, WeightedSums,
};
pub use format::{parse_hypergraph, write_json, write_text};
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use patterns::{PatternGraph, PatternKind};
