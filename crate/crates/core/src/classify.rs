//! Multiplicity-based classification of shadow edges, the induced partition
//! of the hyperedges, and the red/blue shadow coloring for 3-uniform
//! hypergraphs.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

pub type Pair = (usize, usize);

pub(crate) fn ordered(u: usize, v: usize) -> Pair {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Shadow edges split by multiplicity against a threshold `p >= 2`.
/// An edge is heavy when it lies in at least `p` hyperedges, light otherwise.
/// With `p = 2`, light therefore means multiplicity exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    pub threshold: usize,
    pub multiplicity: BTreeMap<Pair, usize>,
    pub heavy: BTreeSet<Pair>,
    pub light: BTreeSet<Pair>,
}

/// Which part of the hyperedge partition a hyperedge landed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    /// Holds a triangle with >= 2 edges of multiplicity >= 2 of which some
    /// triangle edge is light at the threshold.
    H1,
    /// Every internal pair is heavy at the threshold.
    H2,
    /// Everything else.
    H3,
}

/// Partition of the hyperedges at threshold `p`, with the derived graphs:
/// `g1` is the union of the chosen triangles of H1 hyperedges, `g2` the
/// shadow of the H2 hyperedges, and `g3` the multiplicity-1 edges lying
/// inside H3 hyperedges.
#[derive(Clone, Debug)]
pub struct HyperedgePartition {
    pub threshold: usize,
    pub part_of: Vec<Part>,
    /// For each H1 hyperedge index, the lexicographically smallest
    /// qualifying triangle.
    pub chosen_triangle: BTreeMap<usize, [usize; 3]>,
    pub g1: Graph,
    pub g2: Graph,
    pub g3: Graph,
}

impl HyperedgePartition {
    pub fn part_indices(&self, part: Part) -> Vec<usize> {
        self.part_of
            .iter()
            .enumerate()
            .filter(|(_, &p)| p == part)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn size_of(&self, part: Part) -> usize {
        self.part_of.iter().filter(|&&p| p == part).count()
    }
}

/// Red/blue coloring of the shadow of a 3-uniform hypergraph. Blue wins on
/// conflicts, so the two sets are disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowColoring {
    pub red: BTreeSet<Pair>,
    pub blue: BTreeSet<Pair>,
}

impl Hypergraph {
    pub fn classify_edges(&self, p: usize) -> Result<EdgeClassification> {
        if p < 2 {
            return Err(Error::InvalidParameter(format!(
                "multiplicity threshold must be >= 2, got {p}"
            )));
        }
        let mut multiplicity = BTreeMap::new();
        for e in self.edges() {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    *multiplicity.entry((u, v)).or_insert(0) += 1;
                }
            }
        }
        let mut heavy = BTreeSet::new();
        let mut light = BTreeSet::new();
        for (&pair, &m) in &multiplicity {
            if m >= p {
                heavy.insert(pair);
            } else {
                light.insert(pair);
            }
        }
        Ok(EdgeClassification {
            threshold: p,
            multiplicity,
            heavy,
            light,
        })
    }

    /// Sorts every hyperedge into H1, H2 or H3 at threshold `p >= 2`.
    pub fn partition(&self, p: usize) -> Result<HyperedgePartition> {
        let cls = self.classify_edges(p)?;
        let mult = |u: usize, v: usize| cls.multiplicity[&ordered(u, v)];

        let mut part_of = Vec::with_capacity(self.edge_count());
        let mut chosen_triangle = BTreeMap::new();
        let mut g1 = Graph::new(self.n());
        let mut g2 = Graph::new(self.n());
        let mut g3 = Graph::new(self.n());
        let mut h2_idx = Vec::new();
        let mut h3_idx = Vec::new();

        for (idx, e) in self.edges().iter().enumerate() {
            // First triangle (in lexicographic vertex order) with at least
            // two edges of multiplicity >= 2 and a light triangle edge.
            let mut chosen: Option<[usize; 3]> = None;
            'outer: for a in 0..e.len() {
                for b in a + 1..e.len() {
                    for c in b + 1..e.len() {
                        let (x, y, z) = (e[a], e[b], e[c]);
                        let ms = [mult(x, y), mult(x, z), mult(y, z)];
                        let twos = ms.iter().filter(|&&m| m >= 2).count();
                        let has_light = ms.iter().any(|&m| m < p);
                        if twos >= 2 && has_light {
                            chosen = Some([x, y, z]);
                            break 'outer;
                        }
                    }
                }
            }
            if let Some(tri) = chosen {
                part_of.push(Part::H1);
                chosen_triangle.insert(idx, tri);
                g1.insert_edge(tri[0], tri[1]);
                g1.insert_edge(tri[0], tri[2]);
                g1.insert_edge(tri[1], tri[2]);
                continue;
            }
            let all_heavy = pairs(e).all(|(u, v)| mult(u, v) >= p);
            if all_heavy {
                part_of.push(Part::H2);
                h2_idx.push(idx);
            } else {
                part_of.push(Part::H3);
                h3_idx.push(idx);
            }
        }

        for &idx in &h2_idx {
            for (u, v) in pairs(self.edge(idx)) {
                g2.insert_edge(u, v);
            }
        }
        for &idx in &h3_idx {
            for (u, v) in pairs(self.edge(idx)) {
                if mult(u, v) == 1 {
                    g3.insert_edge(u, v);
                }
            }
        }

        Ok(HyperedgePartition {
            threshold: p,
            part_of,
            chosen_triangle,
            g1,
            g2,
            g3,
        })
    }

    /// Colors the shadow of a 3-uniform hypergraph: the two lexicographically
    /// smallest multiplicity-1 edges of every H3 hyperedge turn red, all
    /// edges of H1 and H2 hyperedges turn blue, and blue overrides red.
    pub fn color_shadow(&self, p: usize) -> Result<ShadowColoring> {
        if self.edge_count() > 0 && self.uniformity() != Some(3) {
            return Err(Error::NotUniform(
                "shadow coloring needs a 3-uniform hypergraph".into(),
            ));
        }
        let partition = self.partition(p)?;
        let cls = self.classify_edges(p)?;
        let mut red = BTreeSet::new();
        let mut blue = BTreeSet::new();
        for (idx, e) in self.edges().iter().enumerate() {
            match partition.part_of[idx] {
                Part::H1 | Part::H2 => {
                    for pr in pairs(e) {
                        blue.insert(pr);
                    }
                }
                Part::H3 => {
                    let light: Vec<Pair> = pairs(e)
                        .filter(|&(u, v)| cls.multiplicity[&(u, v)] == 1)
                        .collect();
                    // An H3 hyperedge of a 3-uniform hypergraph has at most
                    // one pair of multiplicity >= 2, hence at least two of
                    // multiplicity 1.
                    debug_assert!(light.len() >= 2);
                    for &pr in light.iter().take(2) {
                        red.insert(pr);
                    }
                }
            }
        }
        red = red.difference(&blue).copied().collect();
        Ok(ShadowColoring { red, blue })
    }
}

fn pairs(e: &[usize]) -> impl Iterator<Item = Pair> + '_ {
    e.iter()
        .enumerate()
        .flat_map(|(i, &u)| e[i + 1..].iter().map(move |&v| (u, v)))
}
