//! Exhaustive sweeps over all graphs on n <= 8 vertices, one edge bitmask at
//! a time.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{count_labeled_embeddings, PatternGraph};

const MAX_BRUTE_N: usize = 8;

fn check_capacity(n: usize, f: &PatternGraph) -> Result<Vec<(usize, usize)>> {
    if n > MAX_BRUTE_N {
        return Err(Error::Capacity(format!(
            "exhaustive graph sweep supports n <= {MAX_BRUTE_N}, got {n}"
        )));
    }
    if f.edge_count() == 0 {
        return Err(Error::InvalidParameter(
            "forbidden pattern must have at least one edge".into(),
        ));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    Ok(pairs)
}

fn graph_of_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> Graph {
    let mut g = Graph::new(n);
    for (b, &(u, v)) in pairs.iter().enumerate() {
        if mask >> b & 1 == 1 {
            g.insert_edge(u, v);
        }
    }
    g
}

/// Maximum edge count of an `f`-free graph on `n` vertices (the Turan number
/// of `f`), by sweeping all 2^C(n,2) graphs newest-first with an incumbent
/// popcount cut.
pub fn brute_turan(n: usize, f: &PatternGraph) -> Result<usize> {
    let pairs = check_capacity(n, f)?;
    // The empty graph is f-free, so 0 is a valid incumbent.
    let mut best = 0usize;
    for mask in 1u32..1 << pairs.len() {
        let m = mask.count_ones() as usize;
        if m <= best {
            continue;
        }
        let g = graph_of_mask(n, &pairs, mask);
        if f.find_embedding(&g).is_none() {
            best = m;
        }
    }
    Ok(best)
}

/// Maximum number of copies of `h` over all `f`-free graphs on `n` vertices
/// (the generalized Turan number).
pub fn brute_gen_turan(n: usize, h: &PatternGraph, f: &PatternGraph) -> Result<u64> {
    let pairs = check_capacity(n, f)?;
    let aut = h.automorphism_count();
    let mut best = 0u64;
    for mask in 0u32..1 << pairs.len() {
        let g = graph_of_mask(n, &pairs, mask);
        if f.find_embedding(&g).is_some() {
            continue;
        }
        let copies = count_labeled_embeddings(h, &g) / aut;
        best = best.max(copies);
    }
    Ok(best)
}
