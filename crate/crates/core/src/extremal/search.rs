//! Exact maximum hyperedge count avoiding a Berge copy, by branch and bound
//! over the r-subsets of the vertex set in lexicographic order.

use std::collections::HashMap;

use crate::berge::{find_witness_core, Pinned};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::patterns::PatternGraph;

/// Outcome of a search. When `exhausted` is false the node budget ran out
/// and `value` is only a lower bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub value: usize,
    pub witness: Hypergraph,
    pub explored: u64,
    pub exhausted: bool,
}

struct SearchCtx<'a> {
    n: usize,
    candidates: Vec<Vec<usize>>,
    pattern: &'a PatternGraph,
    budget: Option<u64>,

    chosen: Vec<usize>,
    shadow: Graph,
    pair_mult: HashMap<(usize, usize), usize>,
    pair_map: HashMap<(usize, usize), Vec<usize>>,

    best: usize,
    best_witness: Vec<usize>,
    explored: u64,
    cut_off: bool,
}

impl SearchCtx<'_> {
    fn push(&mut self, cand_idx: usize) {
        let pos = self.chosen.len();
        self.chosen.push(cand_idx);
        let e = &self.candidates[cand_idx];
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                let m = self.pair_mult.entry((u, v)).or_insert(0);
                *m += 1;
                if *m == 1 {
                    self.shadow.insert_edge(u, v);
                }
                self.pair_map.entry((u, v)).or_default().push(pos);
            }
        }
    }

    fn pop(&mut self) {
        let cand_idx = self.chosen.pop().expect("pop matches push");
        let e = &self.candidates[cand_idx];
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                let m = self.pair_mult.get_mut(&(u, v)).unwrap();
                *m -= 1;
                if *m == 0 {
                    self.shadow.remove_edge(u, v);
                }
                self.pair_map.get_mut(&(u, v)).unwrap().pop();
            }
        }
    }

    /// Does the current selection contain a Berge copy that assigns the
    /// hyperedge just pushed? Any copy absent before the push must use it,
    /// so pinning each pattern edge to it in turn is a complete check.
    fn copy_through_last(&self) -> bool {
        let last_pos = self.chosen.len() - 1;
        let verts = &self.candidates[self.chosen[last_pos]];
        for pe in 0..self.pattern.edge_count() {
            let pinned = Pinned {
                pattern_edge: pe,
                hyperedge: last_pos,
                vertices: verts,
            };
            if find_witness_core(
                self.pattern,
                &self.shadow,
                &self.pair_map,
                self.chosen.len(),
                Some(&pinned),
            )
            .is_some()
            {
                return true;
            }
        }
        false
    }

    fn run(&mut self, idx: usize) {
        self.explored += 1;
        if let Some(b) = self.budget {
            if self.explored > b {
                self.cut_off = true;
                return;
            }
        }
        if self.chosen.len() > self.best {
            self.best = self.chosen.len();
            self.best_witness = self.chosen.clone();
        }
        if idx == self.candidates.len() {
            return;
        }
        // Even taking every remaining candidate cannot beat the incumbent.
        if self.chosen.len() + (self.candidates.len() - idx) <= self.best {
            return;
        }
        self.push(idx);
        if !self.copy_through_last() {
            self.run(idx + 1);
        }
        self.pop();
        if self.cut_off {
            return;
        }
        self.run(idx + 1);
    }
}

/// Largest number of r-uniform hyperedges on `n` vertices with no Berge copy
/// of `f`, plus a maximizing hypergraph. Candidates are included/excluded in
/// lexicographic order and a selection is extended only while it stays free,
/// so the result is deterministic: the first maximum reached wins.
pub fn exact_berge_turan(
    n: usize,
    r: usize,
    f: &PatternGraph,
    budget: Option<u64>,
) -> Result<SearchResult> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "uniformity must be at least 2, got {r}"
        )));
    }
    if n < r {
        return Err(Error::InvalidParameter(format!(
            "need n >= r, got n = {n}, r = {r}"
        )));
    }
    if f.edge_count() == 0 {
        return Err(Error::InvalidParameter(
            "forbidden pattern must have at least one edge".into(),
        ));
    }
    // All r-subsets of 0..n in lexicographic order.
    let mut candidates = Vec::new();
    let mut cur: Vec<usize> = (0..r).collect();
    loop {
        candidates.push(cur.clone());
        let mut i = r;
        while i > 0 && cur[i - 1] == i - 1 + n - r {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cur[i - 1] += 1;
        for j in i..r {
            cur[j] = cur[j - 1] + 1;
        }
    }

    let mut ctx = SearchCtx {
        n,
        candidates,
        pattern: f,
        budget,
        chosen: Vec::new(),
        shadow: Graph::new(n),
        pair_mult: HashMap::new(),
        pair_map: HashMap::new(),
        best: 0,
        best_witness: Vec::new(),
        explored: 0,
        cut_off: false,
    };
    ctx.run(0);

    let witness = Hypergraph::new(
        ctx.n,
        ctx.best_witness
            .iter()
            .map(|&i| ctx.candidates[i].clone())
            .collect(),
    )?;
    Ok(SearchResult {
        value: ctx.best,
        witness,
        explored: ctx.explored,
        exhausted: !ctx.cut_off,
    })
}
