//! Independent reference implementations the integration suites compare
//! against. Everything here is deliberately naive: plain permutation loops
//! and try-all-assignments recursion, no matching theory, no bitsets.
//!
//! Each test binary compiles this module separately and uses its own
//! subset, so unused-item lints are off.
#![allow(dead_code)]

use berge_turan::{BergeWitness, Graph, Hypergraph, PatternGraph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// All ways to injectively assign one hyperedge per pattern edge, each
/// containing its pair. Pure backtracking, used as the matching oracle.
pub fn assignment_count(cands: &[Vec<usize>], edge_total: usize) -> u64 {
    fn rec(cands: &[Vec<usize>], at: usize, used: &mut [bool]) -> u64 {
        if at == cands.len() {
            return 1;
        }
        let mut total = 0;
        for &e in &cands[at] {
            if !used[e] {
                used[e] = true;
                total += rec(cands, at + 1, used);
                used[e] = false;
            }
        }
        total
    }
    let mut used = vec![false; edge_total];
    rec(cands, 0, &mut used)
}

pub fn containing_hyperedges(h: &Hypergraph, u: usize, v: usize) -> Vec<usize> {
    h.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.contains(&u) && e.contains(&v))
        .map(|(i, _)| i)
        .collect()
}

/// Naive Berge detector: every injective vertex placement, then every
/// injective hyperedge assignment.
pub fn brute_berge_present(h: &Hypergraph, f: &PatternGraph) -> bool {
    let pn = f.n();
    if pn > h.n() || f.edge_count() > h.edge_count() {
        return false;
    }
    let mut img = vec![usize::MAX; pn];
    let mut used = vec![false; h.n()];
    place(h, f, 0, &mut img, &mut used)
}

fn place(h: &Hypergraph, f: &PatternGraph, at: usize, img: &mut [usize], used: &mut [bool]) -> bool {
    if at == img.len() {
        let cands: Vec<Vec<usize>> = f
            .edges()
            .iter()
            .map(|&(a, b)| containing_hyperedges(h, img[a], img[b]))
            .collect();
        return assignment_count(&cands, h.edge_count()) > 0;
    }
    for v in 0..h.n() {
        if !used[v] {
            used[v] = true;
            img[at] = v;
            if place(h, f, at + 1, img, used) {
                return true;
            }
            used[v] = false;
        }
    }
    false
}

/// Copy count by raw enumeration: edge-preserving injections divided by a
/// hardcoded automorphism count, so nothing is shared with the library path.
pub fn naive_count_copies(f: &PatternGraph, aut: u64, g: &Graph) -> u64 {
    fn rec(f: &PatternGraph, g: &Graph, at: usize, img: &mut [usize], used: &mut [bool]) -> u64 {
        if at == img.len() {
            return 1;
        }
        let mut total = 0;
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            let consistent = f
                .edges()
                .iter()
                .filter(|&&(a, b)| a.max(b) == at)
                .all(|&(a, b)| g.has_edge(img[a.min(b)], v));
            if consistent {
                used[v] = true;
                img[at] = v;
                total += rec(f, g, at + 1, img, used);
                used[v] = false;
            }
        }
        total
    }
    if f.n() > g.n() {
        return 0;
    }
    let mut img = vec![usize::MAX; f.n()];
    let mut used = vec![false; g.n()];
    let labeled = rec(f, g, 0, &mut img, &mut used);
    assert_eq!(labeled % aut, 0, "labeled count must split into orbits");
    labeled / aut
}

pub fn verify_or_die(h: &Hypergraph, f: &PatternGraph, w: &BergeWitness, what: &str) {
    assert!(
        berge_turan::verify_witness(h, f, w),
        "{what}: witness failed verification: {w:?}"
    );
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn all_triples(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// Random 3-uniform hypergraph: each triple kept independently.
pub fn random_3uniform(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Hypergraph {
    let edges: Vec<Vec<usize>> = all_triples(n)
        .into_iter()
        .filter(|_| rng.gen_bool(density))
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

/// Strips hyperedges until the detector certifies there is no Berge copy of
/// `f` left; removal order is randomized but seeded.
pub fn prune_to_berge_free(rng: &mut ChaCha8Rng, h: Hypergraph, f: &PatternGraph) -> Hypergraph {
    let mut edges = h.edges().to_vec();
    let n = h.n();
    loop {
        let current = Hypergraph::new(n, edges.clone()).unwrap();
        match berge_turan::find_berge_copy(&current, f) {
            None => return current,
            Some(w) => {
                let victim = *w.assignment.choose(rng).unwrap();
                edges.remove(victim);
            }
        }
    }
}
