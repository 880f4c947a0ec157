//! Hypergraphs, their shadow graphs, and pair multiplicities.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A hypergraph on vertices `0..n`. Hyperedges are stored in input order,
/// each as a strictly ascending vertex list of size >= 2; the list of
/// hyperedges is duplicate-free. Index-based results (witness assignments,
/// partition parts) always refer to this stored order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    uniformity: Option<usize>,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each hyperedge. Rejects hyperedges of
    /// size < 2, repeated vertices, out-of-range vertices, and duplicate
    /// hyperedges.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut stored = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            if e.len() < 2 {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {i} has fewer than 2 vertices"
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {i} repeats a vertex"
                )));
            }
            if *e.last().unwrap() >= n {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {i} has a vertex >= n = {n}"
                )));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {i} duplicates an earlier hyperedge"
                )));
            }
            stored.push(e);
        }
        let uniformity = match stored.first() {
            Some(first) if stored.iter().all(|e| e.len() == first.len()) => Some(first.len()),
            _ => None,
        };
        Ok(Hypergraph {
            n,
            edges: stored,
            uniformity,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `Some(r)` when every hyperedge has size `r`; `None` when sizes are
    /// mixed or there are no hyperedges.
    pub fn uniformity(&self) -> Option<usize> {
        self.uniformity
    }

    /// Same hypergraph with hyperedges reordered lexicographically.
    pub fn canonicalized(&self) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.sort();
        Hypergraph {
            n: self.n,
            edges,
            uniformity: self.uniformity,
        }
    }

    /// The shadow graph: pairs of vertices that appear together in at least
    /// one hyperedge.
    pub fn shadow_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for e in &self.edges {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    /// Number of hyperedges containing both `u` and `v`.
    pub fn pair_multiplicity(&self, u: usize, v: usize) -> Result<usize> {
        if u == v {
            return Err(Error::InvalidInput(format!(
                "pair multiplicity needs two distinct vertices, got ({u}, {v})"
            )));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidInput(format!(
                "pair ({u}, {v}) out of range for n = {}",
                self.n
            )));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok())
            .count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_normalizes() {
        let h = Hypergraph::new(5, vec![vec![2, 0, 1], vec![0, 1, 3, 4]]).unwrap();
        assert_eq!(h.edge(0), &[0, 1, 2]);
        assert_eq!(h.uniformity(), None);
        let u = Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(u.uniformity(), Some(3));
    }

    #[test]
    fn rejects_invalid() {
        assert!(Hypergraph::new(3, vec![vec![1]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![1, 1, 2]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 1, 3]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 1], vec![1, 0]]).is_err());
    }

    #[test]
    fn shadow_examples() {
        let empty = Hypergraph::new(6, vec![]).unwrap();
        assert_eq!(empty.shadow_graph().edge_count(), 0);
        assert_eq!(empty.uniformity(), None);

        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let s = h.shadow_graph();
        assert_eq!(s.edge_count(), 5);
        assert_eq!(
            s.edges(),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
        );
    }

    #[test]
    fn multiplicity_examples() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert_eq!(h.pair_multiplicity(0, 1).unwrap(), 2);
        assert_eq!(h.pair_multiplicity(2, 3).unwrap(), 0);
        assert_eq!(h.pair_multiplicity(1, 0).unwrap(), 2);
        assert!(h.pair_multiplicity(1, 1).is_err());
        assert!(h.pair_multiplicity(0, 4).is_err());
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let h = Hypergraph::new(5, vec![vec![2, 3, 4], vec![0, 1, 2]]).unwrap();
        let c = h.canonicalized();
        assert_eq!(c.edge(0), &[0, 1, 2]);
        assert_eq!(c.edge(1), &[2, 3, 4]);
        assert_eq!(c.canonicalized(), c);
    }
}
