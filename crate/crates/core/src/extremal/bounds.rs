//! Bound reports with exact rational arithmetic: no comparison in this
//! module goes through floating point.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::extremal::{brute_gen_turan, brute_turan, exact_berge_turan};
use crate::hypergraph::Hypergraph;
use crate::patterns::PatternGraph;

pub type Rational = Ratio<i64>;

/// Parameters a report was computed at; unused fields stay None.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundParams {
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub pattern: Option<String>,
    pub p: Option<usize>,
    pub k: Option<usize>,
}

/// One checked inequality: `holds` if and only if `lhs <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub name: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub params: BoundParams,
    pub holds: bool,
}

impl BoundReport {
    pub fn new(name: impl Into<String>, lhs: Rational, rhs: Rational, params: BoundParams) -> Self {
        BoundReport {
            name: name.into(),
            lhs,
            rhs,
            holds: lhs <= rhs,
            params,
        }
    }
}

fn int(v: u64) -> Rational {
    Rational::from_integer(v as i64)
}

/// Both halves of the sandwich around the Berge-Turan number: the maximum
/// count of r-cliques in an f-free graph bounds it from below, and adding
/// the graph Turan number of f bounds it from above. Everything is computed
/// exactly, so the sizes are capped.
pub fn check_sandwich(n: usize, r: usize, f: &PatternGraph) -> Result<[BoundReport; 2]> {
    let comb = |n: usize, r: usize| -> usize {
        if r > n {
            return 0;
        }
        (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
    };
    if comb(n, r) > 20 {
        return Err(Error::Capacity(format!(
            "sandwich check needs C(n, r) <= 20 candidates, got C({n}, {r}) = {}",
            comb(n, r)
        )));
    }
    let clique = PatternGraph::clique(r)?;
    let lower = brute_gen_turan(n, &clique, f)?;
    let mid = exact_berge_turan(n, r, f, None)?;
    if !mid.exhausted {
        return Err(Error::Capacity(
            "berge search did not exhaust the candidate space".into(),
        ));
    }
    let upper = lower + brute_turan(n, f)? as u64;
    let params = BoundParams {
        n: Some(n),
        r: Some(r),
        pattern: Some(f.spec_string()),
        ..Default::default()
    };
    Ok([
        BoundReport::new(
            "sandwich lower: max r-clique count <= berge turan",
            int(lower),
            int(mid.value as u64),
            params.clone(),
        ),
        BoundReport::new(
            "sandwich upper: berge turan <= r-clique count + graph turan",
            int(mid.value as u64),
            int(upper),
            params,
        ),
    ])
}

/// Partition-based upper bound on the hyperedge count of an r-uniform
/// hypergraph with no Berge copy of `f`, at threshold p = |E(f)|:
///
///   |H| <= (p-1) N(K3, G1) + N(Kr, G2) + |E(G3)| / (k (r-k)),
///
/// with k = min(r-1, |V(f)|-1). On hypergraphs that do contain a Berge copy
/// the report may legitimately fail.
pub fn check_fre_bound(h: &Hypergraph, f: &PatternGraph) -> Result<BoundReport> {
    let p = f.edge_count();
    if p < 2 {
        return Err(Error::InvalidParameter(
            "pattern needs at least two edges for the partition threshold".into(),
        ));
    }
    if h.edge_count() == 0 {
        return Ok(BoundReport::new(
            "partition bound on berge-free size",
            int(0),
            int(0),
            BoundParams {
                pattern: Some(f.spec_string()),
                p: Some(p),
                ..Default::default()
            },
        ));
    }
    let r = h.uniformity().ok_or_else(|| {
        Error::NotUniform("partition bound needs an r-uniform hypergraph".into())
    })?;
    let k = (r - 1).min(f.n() - 1);
    if k == 0 || k >= r {
        return Err(Error::InvalidParameter(format!(
            "degenerate split: k = {k} at r = {r}"
        )));
    }
    let partition = h.partition(p)?;
    let triangles = PatternGraph::clique(3)?.count_copies(&partition.g1);
    let r_cliques = PatternGraph::clique(r)?.count_copies(&partition.g2);
    let light = partition.g3.edge_count() as u64;
    let rhs = int((p as u64 - 1) * triangles)
        + int(r_cliques)
        + Rational::new(light as i64, (k * (r - k)) as i64);
    Ok(BoundReport::new(
        "partition bound on berge-free size",
        int(h.edge_count() as u64),
        rhs,
        BoundParams {
            n: Some(h.n()),
            r: Some(r),
            pattern: Some(f.spec_string()),
            p: Some(p),
            k: Some(k),
        },
    ))
}

/// The finite part of the generic upper-bound recipe, evaluated with exact
/// small-case Turan numbers:
/// (p-1) ex(n, K3, f) + ex(n, Kr, f) + (p-1) ex(n, f) / (k (r-k)).
/// Advisory only: the full statement carries an o(n^2) term that is not
/// represented here, so this is not asserted against search values.
pub fn bena_rhs(n: usize, r: usize, f: &PatternGraph) -> Result<Rational> {
    let p = f.edge_count();
    if p < 1 || r < 2 {
        return Err(Error::InvalidParameter(
            "needs r >= 2 and a pattern with at least one edge".into(),
        ));
    }
    let k = (r - 1).min(f.n() - 1);
    let triangles = brute_gen_turan(n, &PatternGraph::clique(3)?, f)?;
    let cliques = brute_gen_turan(n, &PatternGraph::clique(r)?, f)?;
    let graph_turan = brute_turan(n, f)? as u64;
    Ok(int((p as u64 - 1) * triangles)
        + int(cliques)
        + Rational::new(((p - 1) * graph_turan as usize) as i64, (k * (r - k)) as i64))
}

/// Size-based weight of an r-vertex hyperedge relative to a forbidden
/// pattern f on v vertices: r - 1 while the hyperedge cannot even hold two
/// disjoint (v-1)-cliques, afterwards the count of cross pairs left over
/// when the hyperedge is packed with (v-1)-cliques.
pub fn pattern_weight(size: usize, f: &PatternGraph) -> i64 {
    let v = f.n();
    let r = size as i64;
    if v <= 1 || size <= v {
        return r - 1;
    }
    let comb2 = |x: i64| x * (x - 1) / 2;
    let b = (v - 1) as i64;
    let full = (size as i64) / b;
    comb2(r) - full * comb2(b) - comb2(r - full * b)
}

/// Additive statistics of the hyperedge sizes, including the weight above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSums {
    pub sum_size_minus_2: u64,
    pub sum_size: u64,
    pub sum_size_sq: u64,
    pub sum_weight: i64,
    /// Weight of each hyperedge size occurring in the hypergraph.
    pub weight_table: BTreeMap<usize, i64>,
}

pub fn weighted_sums(h: &Hypergraph, f: &PatternGraph) -> WeightedSums {
    let mut sums = WeightedSums {
        sum_size_minus_2: 0,
        sum_size: 0,
        sum_size_sq: 0,
        sum_weight: 0,
        weight_table: BTreeMap::new(),
    };
    for e in h.edges() {
        let s = e.len();
        sums.sum_size_minus_2 += (s - 2) as u64;
        sums.sum_size += s as u64;
        sums.sum_size_sq += (s * s) as u64;
        let w = *sums
            .weight_table
            .entry(s)
            .or_insert_with(|| pattern_weight(s, f));
        sums.sum_weight += w;
    }
    sums
}
