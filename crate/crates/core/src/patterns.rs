//! Pattern graphs (books, fans, cliques, complete multipartite, Turan,
//! custom) and subgraph-copy operations against host graphs.
//!
//! A "copy" of a pattern in a host graph is a subgraph isomorphic to the
//! pattern: a vertex subset together with an edge subset. Copies are counted
//! once each regardless of how many embeddings realize them.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternKind {
    /// `t` triangles sharing one edge. Vertices 0 and 1 are the shared pair,
    /// vertices `2..t+2` the remaining page vertices.
    Book { t: usize },
    /// `t` triangles sharing one vertex. Vertex 0 is the center, vertices
    /// `(2i+1, 2i+2)` the i-th page pair.
    Fan { t: usize },
    Clique { r: usize },
    /// Parts laid out consecutively from vertex 0; edges join distinct parts.
    CompleteMultipartite { parts: Vec<usize> },
    /// Complete multipartite with `q` near-equal parts on `n` vertices;
    /// the `n mod q` larger parts come first.
    Turan { n: usize, q: usize },
    Custom,
}

#[derive(Clone, Debug)]
pub struct PatternGraph {
    kind: PatternKind,
    n: usize,
    edges: Vec<(usize, usize)>,
    marked: Vec<usize>,
}

/// Patterns are meant for exhaustive embedding work; keep them small.
const MAX_PATTERN_VERTICES: usize = 32;

impl PatternGraph {
    fn build(
        kind: PatternKind,
        n: usize,
        mut edges: Vec<(usize, usize)>,
        marked: Vec<usize>,
    ) -> Result<Self> {
        if n == 0 || n > MAX_PATTERN_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "pattern must have between 1 and {MAX_PATTERN_VERTICES} vertices, got {n}"
            )));
        }
        let mut norm = Vec::with_capacity(edges.len());
        for (u, v) in edges.drain(..) {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "pattern edge ({u}, {v}) invalid for n = {n}"
                )));
            }
            norm.push(if u < v { (u, v) } else { (v, u) });
        }
        norm.sort_unstable();
        norm.dedup();
        Ok(PatternGraph {
            kind,
            n,
            edges: norm,
            marked,
        })
    }

    pub fn book(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidParameter(
                "a book needs at least one page".into(),
            ));
        }
        let mut edges = vec![(0, 1)];
        for w in 2..t + 2 {
            edges.push((0, w));
            edges.push((1, w));
        }
        Self::build(PatternKind::Book { t }, t + 2, edges, vec![0, 1])
    }

    pub fn fan(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidParameter(
                "a fan needs at least one page".into(),
            ));
        }
        let mut edges = Vec::with_capacity(3 * t);
        for i in 0..t {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            edges.push((0, a));
            edges.push((0, b));
            edges.push((a, b));
        }
        Self::build(PatternKind::Fan { t }, 2 * t + 1, edges, vec![0])
    }

    pub fn clique(r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParameter(format!(
                "a clique pattern needs r >= 2, got {r}"
            )));
        }
        let edges = (0..r)
            .flat_map(|u| (u + 1..r).map(move |v| (u, v)))
            .collect();
        Self::build(PatternKind::Clique { r }, r, edges, vec![])
    }

    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        Self::multipartite_with_kind(
            parts,
            PatternKind::CompleteMultipartite {
                parts: parts.to_vec(),
            },
        )
    }

    pub fn turan(n: usize, q: usize) -> Result<Self> {
        if q == 0 || q > n {
            return Err(Error::InvalidParameter(format!(
                "turan pattern needs 1 <= q <= n, got n = {n}, q = {q}"
            )));
        }
        let big = n % q;
        let parts: Vec<usize> = (0..q)
            .map(|i| n / q + usize::from(i < big))
            .collect();
        Self::multipartite_with_kind(&parts, PatternKind::Turan { n, q })
    }

    fn multipartite_with_kind(parts: &[usize], kind: PatternKind) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidParameter(
                "multipartite parts must be nonempty".into(),
            ));
        }
        let n: usize = parts.iter().sum();
        let starts: Vec<usize> = parts
            .iter()
            .scan(0, |acc, &s| {
                let v = *acc;
                *acc += s;
                Some(v)
            })
            .collect();
        let mut edges = Vec::new();
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                for a in starts[i]..starts[i] + parts[i] {
                    for b in starts[j]..starts[j] + parts[j] {
                        edges.push((a, b));
                    }
                }
            }
        }
        Self::build(kind, n, edges, vec![])
    }

    pub fn custom(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::build(PatternKind::Custom, n, edges, vec![])
    }

    /// Parses a CLI pattern spec: `clique:R`, `book:T`, `fan:T`,
    /// `kab:S1,S2,S3`, `turan:N,Q`.
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unrecognized pattern spec '{spec}'"));
        let (name, args) = spec.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        match (name, nums.as_slice()) {
            ("clique", [r]) => Self::clique(*r),
            ("book", [t]) => Self::book(*t),
            ("fan", [t]) => Self::fan(*t),
            ("kab", parts) if parts.len() >= 2 => Self::complete_multipartite(parts),
            ("turan", [n, q]) => Self::turan(*n, *q),
            _ => Err(bad()),
        }
    }

    /// Inverse of `parse_spec` where one exists.
    pub fn spec_string(&self) -> String {
        match &self.kind {
            PatternKind::Book { t } => format!("book:{t}"),
            PatternKind::Fan { t } => format!("fan:{t}"),
            PatternKind::Clique { r } => format!("clique:{r}"),
            PatternKind::CompleteMultipartite { parts } => format!(
                "kab:{}",
                parts
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            PatternKind::Turan { n, q } => format!("turan:{n},{q}"),
            PatternKind::Custom => format!("custom(n={}, m={})", self.n, self.edges.len()),
        }
    }

    pub fn kind(&self) -> &PatternKind {
        &self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Distinguished vertices: the shared pair of a book, the center of a fan.
    pub fn marked(&self) -> &[usize] {
        &self.marked
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, self.edges.iter().copied())
            .expect("pattern edges are validated")
    }

    /// Number of edge-preserving bijections of the pattern onto itself.
    pub fn automorphism_count(&self) -> u64 {
        let host = self.to_graph();
        let plan = EmbedPlan::new(self, &degree_order(self), &[]);
        let mut count = 0u64;
        plan.run(&host, None, &mut |_| {
            count += 1;
            false
        });
        count
    }

    /// Number of copies of the pattern in `g`: labeled embeddings divided by
    /// the automorphism count.
    pub fn count_copies(&self, g: &Graph) -> u64 {
        if self.n > g.n() {
            return 0;
        }
        let plan = EmbedPlan::new(self, &degree_order(self), &[]);
        let mut count = 0u64;
        plan.run(g, None, &mut |_| {
            count += 1;
            false
        });
        count / self.automorphism_count()
    }

    /// First embedding of the pattern into `g` in lexicographic image order,
    /// as a map pattern-vertex -> host-vertex.
    pub fn find_embedding(&self, g: &Graph) -> Option<Vec<usize>> {
        if self.n > g.n() {
            return None;
        }
        let order: Vec<usize> = (0..self.n).collect();
        let plan = EmbedPlan::new(self, &order, &self.symmetry_constraints());
        let mut found = None;
        plan.run(g, None, &mut |img| {
            found = Some(img.to_vec());
            true
        });
        found
    }

    /// Image-order constraints `(a, b)` meaning phi(a) < phi(b) that pick one
    /// representative per automorphism class of embeddings. Safe for
    /// first-match searches: the lexicographically smallest valid embedding
    /// always satisfies them.
    pub(crate) fn symmetry_constraints(&self) -> Vec<(usize, usize)> {
        match &self.kind {
            PatternKind::Book { t } => {
                let mut c = vec![(0, 1)];
                for w in 2..t + 1 {
                    c.push((w, w + 1));
                }
                c
            }
            PatternKind::Fan { t } => {
                let mut c = Vec::new();
                for i in 0..*t {
                    c.push((2 * i + 1, 2 * i + 2));
                    if i + 1 < *t {
                        c.push((2 * i + 1, 2 * i + 3));
                    }
                }
                c
            }
            PatternKind::Clique { r } => (0..r - 1).map(|i| (i, i + 1)).collect(),
            PatternKind::CompleteMultipartite { .. } | PatternKind::Turan { .. } => {
                let parts: Vec<usize> = match &self.kind {
                    PatternKind::CompleteMultipartite { parts } => parts.clone(),
                    PatternKind::Turan { n, q } => {
                        let big = n % q;
                        (0..*q).map(|i| n / q + usize::from(i < big)).collect()
                    }
                    _ => unreachable!(),
                };
                let mut c = Vec::new();
                let mut starts = Vec::new();
                let mut acc = 0;
                for &s in &parts {
                    starts.push(acc);
                    for v in acc..acc + s - 1 {
                        c.push((v, v + 1));
                    }
                    acc += s;
                }
                // Equal-sized parts are interchangeable; order them by their
                // first image.
                for i in 0..parts.len() {
                    for j in i + 1..parts.len() {
                        if parts[i] == parts[j] {
                            c.push((starts[i], starts[j]));
                            break;
                        }
                    }
                }
                c
            }
            PatternKind::Custom => Vec::new(),
        }
    }
}

/// Pattern vertices sorted by decreasing degree (ties by index); good default
/// order for counting.
fn degree_order(p: &PatternGraph) -> Vec<usize> {
    let mut deg = vec![0usize; p.n];
    for &(u, v) in &p.edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut order: Vec<usize> = (0..p.n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    order
}

/// Precomputed state for backtracking over injective, edge-preserving maps of
/// a pattern into a host graph. Visits image tuples in lexicographic order of
/// the chosen vertex order.
pub(crate) struct EmbedPlan {
    pn: usize,
    order: Vec<usize>,
    /// Positions (into `order`) of earlier-placed neighbors, per position.
    earlier: Vec<Vec<usize>>,
    /// Positions whose image must be strictly below this position's image.
    below: Vec<Vec<usize>>,
}

impl EmbedPlan {
    pub(crate) fn new(
        pattern: &PatternGraph,
        order: &[usize],
        constraints: &[(usize, usize)],
    ) -> Self {
        let pn = pattern.n;
        debug_assert_eq!(order.len(), pn);
        let mut pos = vec![0usize; pn];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let mut earlier = vec![Vec::new(); pn];
        for &(u, v) in &pattern.edges {
            let (pu, pv) = (pos[u], pos[v]);
            if pu < pv {
                earlier[pv].push(pu);
            } else {
                earlier[pu].push(pv);
            }
        }
        let mut below = vec![Vec::new(); pn];
        for &(a, b) in constraints {
            let (pa, pb) = (pos[a], pos[b]);
            debug_assert!(pa < pb, "constraints must point forward in the order");
            below[pb].push(pa);
        }
        EmbedPlan {
            pn,
            order: order.to_vec(),
            earlier,
            below,
        }
    }

    /// Runs the backtracking search. `domains`, when given, restricts the
    /// image of each pattern vertex to a bitmask over host vertices. The
    /// visitor receives the image indexed by pattern vertex and returns true
    /// to stop the search.
    pub(crate) fn run(
        &self,
        host: &Graph,
        domains: Option<&[Option<Vec<u64>>]>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) {
        let hn = host.n();
        if self.pn > hn {
            return;
        }
        let words = hn.div_ceil(64);
        let mut full = vec![u64::MAX; words];
        if !hn.is_multiple_of(64) && words > 0 {
            full[words - 1] = (1u64 << (hn % 64)) - 1;
        }
        let mut used = vec![0u64; words];
        let mut cand = vec![0u64; words * self.pn];
        let mut img_by_vertex = vec![usize::MAX; self.pn];
        let mut img_by_pos = vec![usize::MAX; self.pn];
        self.rec(
            0,
            host,
            domains,
            &full,
            &mut used,
            &mut cand,
            &mut img_by_pos,
            &mut img_by_vertex,
            visit,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        &self,
        k: usize,
        host: &Graph,
        domains: Option<&[Option<Vec<u64>>]>,
        full: &[u64],
        used: &mut [u64],
        cand: &mut [u64],
        img_by_pos: &mut [usize],
        img_by_vertex: &mut [usize],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if k == self.pn {
            return visit(img_by_vertex);
        }
        let words = full.len();
        let v = self.order[k];
        {
            let buf = &mut cand[k * words..(k + 1) * words];
            match self.earlier[k].split_first() {
                None => buf.copy_from_slice(full),
                Some((&first, rest)) => {
                    buf.copy_from_slice(host.row(img_by_pos[first]));
                    for &p in rest {
                        for (b, r) in buf.iter_mut().zip(host.row(img_by_pos[p])) {
                            *b &= r;
                        }
                    }
                }
            }
            for (b, u) in buf.iter_mut().zip(used.iter()) {
                *b &= !u;
            }
            if let Some(doms) = domains {
                if let Some(dom) = &doms[v] {
                    for (b, d) in buf.iter_mut().zip(dom) {
                        *b &= d;
                    }
                }
            }
            let mut lower = 0usize;
            for &p in &self.below[k] {
                lower = lower.max(img_by_pos[p] + 1);
            }
            for word in buf.iter_mut().take(lower / 64) {
                *word = 0;
            }
            if !lower.is_multiple_of(64) {
                buf[lower / 64] &= !((1u64 << (lower % 64)) - 1);
            }
        }
        // Deeper levels only write their own candidate slices, so the level-k
        // words can be drained one local copy at a time without re-reading.
        for wi in 0..words {
            let mut word = cand[k * words + wi];
            while word != 0 {
                let x = wi * 64 + word.trailing_zeros() as usize;
                word &= word - 1;
                img_by_pos[k] = x;
                img_by_vertex[v] = x;
                used[x / 64] |= 1 << (x % 64);
                let stop = self.rec(
                    k + 1,
                    host,
                    domains,
                    full,
                    used,
                    cand,
                    img_by_pos,
                    img_by_vertex,
                    visit,
                );
                used[x / 64] &= !(1 << (x % 64));
                if stop {
                    return true;
                }
            }
        }
        img_by_pos[k] = usize::MAX;
        img_by_vertex[v] = usize::MAX;
        false
    }
}

/// Raw labeled-embedding count, exposed for callers that amortize the
/// automorphism division themselves.
pub(crate) fn count_labeled_embeddings(pattern: &PatternGraph, g: &Graph) -> u64 {
    if pattern.n > g.n() {
        return 0;
    }
    let plan = EmbedPlan::new(pattern, &degree_order(pattern), &[]);
    let mut count = 0u64;
    plan.run(g, None, &mut |_| {
        count += 1;
        false
    });
    count
}
