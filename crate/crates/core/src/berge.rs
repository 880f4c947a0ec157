//! Berge copies: a Berge copy of a pattern F in a hypergraph assigns a
//! distinct hyperedge to every edge of an embedded copy of F in the shadow,
//! such that each hyperedge contains its edge's image. Detection reduces to
//! bipartite matching between pattern edges and hyperedges.

use std::collections::HashMap;

use crate::classify::ordered;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::patterns::{EmbedPlan, PatternGraph};

/// A verified Berge copy: `embedding[i]` is the host vertex for pattern
/// vertex `i`; `assignment[j]` is the hyperedge index carrying pattern edge
/// `j` (in `pattern.edges()` order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeWitness {
    pub embedding: Vec<usize>,
    pub assignment: Vec<usize>,
}

/// Hyperedge indices containing each shadow pair, in hyperedge order.
pub(crate) fn pair_to_hyperedges(h: &Hypergraph) -> HashMap<(usize, usize), Vec<usize>> {
    let mut map: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (idx, e) in h.edges().iter().enumerate() {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                map.entry((u, v)).or_default().push(idx);
            }
        }
    }
    map
}

/// Kuhn's augmenting-path matching. `cands[i]` lists the right vertices
/// admissible for left vertex `i`; `blocked` right vertices are unavailable.
/// Returns a full left-saturating matching or None.
fn saturate(
    cands: &[&[usize]],
    right_count: usize,
    pre: Option<(usize, usize)>,
) -> Option<Vec<usize>> {
    let n_left = cands.len();
    let mut right_of: Vec<usize> = vec![usize::MAX; n_left];
    let mut left_of: Vec<usize> = vec![usize::MAX; right_count];
    if let Some((l, r)) = pre {
        right_of[l] = r;
        left_of[r] = l;
    }

    fn augment(
        l: usize,
        cands: &[&[usize]],
        right_of: &mut [usize],
        left_of: &mut [usize],
        seen: &mut [bool],
    ) -> bool {
        for &r in cands[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if left_of[r] == usize::MAX
                || augment(left_of[r], cands, right_of, left_of, seen)
            {
                right_of[l] = r;
                left_of[r] = l;
                return true;
            }
        }
        false
    }

    for l in 0..n_left {
        if right_of[l] != usize::MAX {
            continue;
        }
        let mut seen = vec![false; right_count];
        if let Some((_, pinned_r)) = pre {
            seen[pinned_r] = true;
        }
        if !augment(l, cands, &mut right_of, &mut left_of, &mut seen) {
            return None;
        }
    }
    Some(right_of)
}

pub(crate) struct Pinned<'a> {
    /// Index into `pattern.edges()`.
    pub pattern_edge: usize,
    /// Right-side id the pinned pattern edge must use.
    pub hyperedge: usize,
    /// Vertices of that hyperedge; the pinned pattern edge's endpoints must
    /// embed inside it.
    pub vertices: &'a [usize],
}

/// Shared search core: enumerates embeddings of the pattern into `shadow`
/// in lexicographic image order (one representative per automorphism class)
/// and tries to match pattern edges to distinct containing hyperedges.
pub(crate) fn find_witness_core(
    pattern: &PatternGraph,
    shadow: &Graph,
    pair_map: &HashMap<(usize, usize), Vec<usize>>,
    right_count: usize,
    pinned: Option<&Pinned>,
) -> Option<BergeWitness> {
    if pattern.n() > shadow.n() || pattern.edge_count() > right_count {
        return None;
    }

    let domains = pinned.map(|pin| {
        let words = shadow.n().div_ceil(64);
        let mut mask = vec![0u64; words];
        for &v in pin.vertices {
            mask[v / 64] |= 1 << (v % 64);
        }
        let (a, b) = pattern.edges()[pin.pattern_edge];
        let mut doms: Vec<Option<Vec<u64>>> = vec![None; pattern.n()];
        doms[a] = Some(mask.clone());
        doms[b] = Some(mask);
        doms
    });

    let order: Vec<usize> = (0..pattern.n()).collect();
    let plan = EmbedPlan::new(pattern, &order, &pattern.symmetry_constraints());
    let mut witness = None;
    plan.run(shadow, domains.as_deref(), &mut |img| {
        let mut cands: Vec<&[usize]> = Vec::with_capacity(pattern.edge_count());
        for &(a, b) in pattern.edges() {
            match pair_map.get(&ordered(img[a], img[b])) {
                Some(list) => cands.push(list),
                None => return false,
            }
        }
        let pre = pinned.map(|pin| (pin.pattern_edge, pin.hyperedge));
        if let Some(pre) = pre {
            if !cands[pre.0].contains(&pre.1) {
                return false;
            }
        }
        if let Some(assignment) = saturate(&cands, right_count, pre) {
            witness = Some(BergeWitness {
                embedding: img.to_vec(),
                assignment,
            });
            return true;
        }
        false
    });
    witness
}

/// Finds a Berge copy of `pattern` in `h`, or None. Deterministic: the first
/// embedding in lexicographic image order that admits an assignment wins.
pub fn find_berge_copy(h: &Hypergraph, pattern: &PatternGraph) -> Option<BergeWitness> {
    if pattern.edge_count() > h.edge_count() {
        return None;
    }
    let shadow = h.shadow_graph();
    let pair_map = pair_to_hyperedges(h);
    find_witness_core(pattern, &shadow, &pair_map, h.edge_count(), None)
}

/// Checks a claimed witness: injective embedding, injective assignment, and
/// containment of every pattern edge's image in its hyperedge. Malformed
/// input returns false rather than an error.
pub fn verify_witness(h: &Hypergraph, pattern: &PatternGraph, w: &BergeWitness) -> bool {
    if w.embedding.len() != pattern.n() || w.assignment.len() != pattern.edge_count() {
        return false;
    }
    if w.embedding.iter().any(|&v| v >= h.n()) {
        return false;
    }
    let mut vs = w.embedding.clone();
    vs.sort_unstable();
    if vs.windows(2).any(|p| p[0] == p[1]) {
        return false;
    }
    if w.assignment.iter().any(|&e| e >= h.edge_count()) {
        return false;
    }
    let mut es = w.assignment.clone();
    es.sort_unstable();
    if es.windows(2).any(|p| p[0] == p[1]) {
        return false;
    }
    pattern.edges().iter().zip(&w.assignment).all(|(&(a, b), &e)| {
        let he = h.edge(e);
        he.binary_search(&w.embedding[a]).is_ok() && he.binary_search(&w.embedding[b]).is_ok()
    })
}

/// Certifies a set of shadow edges as the core of a Berge copy of the graph
/// they span: finds pairwise-distinct containing hyperedges, one per edge.
/// Errors if some pair is not a shadow edge at all.
pub fn certify_core(h: &Hypergraph, core: &[(usize, usize)]) -> Result<Option<Vec<usize>>> {
    let pair_map = pair_to_hyperedges(h);
    let mut cands: Vec<&[usize]> = Vec::with_capacity(core.len());
    for &(u, v) in core {
        if u == v || u >= h.n() || v >= h.n() {
            return Err(Error::InvalidInput(format!(
                "core edge ({u}, {v}) is not a valid vertex pair"
            )));
        }
        match pair_map.get(&ordered(u, v)) {
            Some(list) => cands.push(list),
            None => {
                return Err(Error::InvalidInput(format!(
                    "core edge ({u}, {v}) is not in the shadow graph"
                )))
            }
        }
    }
    Ok(saturate(&cands, h.edge_count(), None))
}

/// A book of certified triangle cores: every page triangle (shared pair plus
/// one page vertex) is individually the core of a Berge triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookOfCores {
    pub rootlet: (usize, usize),
    pub pages: Vec<usize>,
    /// Hyperedges certifying each page triangle, ordered (uv, uw, vw).
    pub page_assignments: Vec<[usize; 3]>,
}

/// A fan of certified triangle cores: page pairs are pairwise vertex-disjoint
/// and each triangle (center plus a pair) is individually certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanOfCores {
    pub center: usize,
    pub pages: Vec<(usize, usize)>,
    /// Hyperedges certifying each page triangle, ordered (cv, cw, vw).
    pub page_assignments: Vec<[usize; 3]>,
}

fn certify_triangle(
    pair_map: &HashMap<(usize, usize), Vec<usize>>,
    right_count: usize,
    e1: (usize, usize),
    e2: (usize, usize),
    e3: (usize, usize),
) -> Option<[usize; 3]> {
    let c1 = pair_map.get(&e1)?;
    let c2 = pair_map.get(&e2)?;
    let c3 = pair_map.get(&e3)?;
    let cands = [c1.as_slice(), c2.as_slice(), c3.as_slice()];
    saturate(&cands, right_count, None).map(|m| [m[0], m[1], m[2]])
}

/// Searches for `s` pages over a shared shadow edge, each page triangle
/// certified independently. Deterministic: smallest rootlet pair first, then
/// ascending page vertices.
pub fn find_book_of_cores(h: &Hypergraph, s: usize) -> Result<Option<BookOfCores>> {
    if s == 0 {
        return Err(Error::InvalidParameter(
            "a book of cores needs at least one page".into(),
        ));
    }
    let shadow = h.shadow_graph();
    let pair_map = pair_to_hyperedges(h);
    let m = h.edge_count();
    for (u, v) in shadow.edges() {
        let mut pages = Vec::new();
        let mut assignments = Vec::new();
        for w in shadow.common_neighbors(u, v) {
            if let Some(a) = certify_triangle(
                &pair_map,
                m,
                ordered(u, v),
                ordered(u, w),
                ordered(v, w),
            ) {
                pages.push(w);
                assignments.push(a);
                if pages.len() == s {
                    return Ok(Some(BookOfCores {
                        rootlet: (u, v),
                        pages,
                        page_assignments: assignments,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Searches for `s` vertex-disjoint certified page pairs around a shared
/// center. Deterministic: smallest center first, then the lexicographically
/// first disjoint family in pair order.
pub fn find_fan_of_cores(h: &Hypergraph, s: usize) -> Result<Option<FanOfCores>> {
    if s == 0 {
        return Err(Error::InvalidParameter(
            "a fan of cores needs at least one page".into(),
        ));
    }
    let shadow = h.shadow_graph();
    let pair_map = pair_to_hyperedges(h);
    let m = h.edge_count();
    for c in 0..h.n() {
        let link: Vec<usize> = shadow.neighbors(c).collect();
        let mut certified: Vec<((usize, usize), [usize; 3])> = Vec::new();
        for (i, &v) in link.iter().enumerate() {
            for &w in &link[i + 1..] {
                if !shadow.has_edge(v, w) {
                    continue;
                }
                if let Some(a) = certify_triangle(
                    &pair_map,
                    m,
                    ordered(c, v),
                    ordered(c, w),
                    ordered(v, w),
                ) {
                    certified.push(((v, w), a));
                }
            }
        }
        if certified.len() < s {
            continue;
        }
        let mut chosen = Vec::new();
        if pick_disjoint(&certified, 0, s, &mut chosen) {
            let (pages, assignments) = chosen
                .iter()
                .map(|&i| certified[i])
                .unzip();
            return Ok(Some(FanOfCores {
                center: c,
                pages,
                page_assignments: assignments,
            }));
        }
    }
    Ok(None)
}

/// Lexicographically first family of `need` pairwise vertex-disjoint pairs,
/// by index into `certified`; simple backtracking with a remaining-count cut.
fn pick_disjoint(
    certified: &[((usize, usize), [usize; 3])],
    from: usize,
    need: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if need == 0 {
        return true;
    }
    if certified.len() - from < need {
        return false;
    }
    for i in from..certified.len() {
        let (v, w) = certified[i].0;
        if chosen
            .iter()
            .all(|&j| {
                let (a, b) = certified[j].0;
                a != v && a != w && b != v && b != w
            })
        {
            chosen.push(i);
            if pick_disjoint(certified, i + 1, need - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
