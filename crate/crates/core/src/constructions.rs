//! Extremal hypergraph constructions built from twin pairs and blocks.
//!
//! The 3-uniform families (1-3) split the vertices into four consecutive
//! groups A1..A4 of near-equal size; vertex `A1[i]` is the twin of `A2[i]`
//! and `A3[j]` of `A4[j]`. Every hyperedge is one twin pair plus a single
//! vertex from the other side, which caps each such pair's contribution and
//! yields floor(n^2/8) hyperedges. The r-uniform families (4-5) replace twin
//! pairs by consecutive blocks.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Sizes of the four vertex groups: remainder 1 enlarges the last group,
/// remainder 2 the last two, remainder 3 the first three.
pub fn part_sizes(n: usize) -> [usize; 4] {
    let q = n / 4;
    match n % 4 {
        0 => [q, q, q, q],
        1 => [q, q, q, q + 1],
        2 => [q, q, q + 1, q + 1],
        _ => [q + 1, q + 1, q + 1, q],
    }
}

fn check_n(n: usize) -> Result<[usize; 4]> {
    if n < 8 {
        return Err(Error::InvalidParameter(format!(
            "construction needs n >= 8, got {n}"
        )));
    }
    Ok(part_sizes(n))
}

/// Max t such that t-1 distinguished twin pairs fit on both sides.
fn check_t(n: usize, t: usize) -> Result<()> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "construction needs t >= 2, got {t}"
        )));
    }
    if t - 1 > n / 4 {
        return Err(Error::InvalidParameter(format!(
            "t = {t} too large: needs t - 1 <= floor(n/4) = {} at n = {n}",
            n / 4
        )));
    }
    Ok(())
}

/// Every left twin pair combined with every right vertex. Contains no Berge
/// triangle: the only repeated pairs are the twin pairs themselves, and a
/// shadow triangle through a twin pair has its two cross pairs in a single
/// hyperedge.
pub fn construction1(n: usize) -> Result<Hypergraph> {
    let [s1, s2, _, _] = check_n(n)?;
    let right_start = s1 + s2;
    let mut edges = Vec::with_capacity(n * n / 8);
    for i in 0..s1 {
        for w in right_start..n {
            edges.push(vec![i, s1 + i, w]);
        }
    }
    Hypergraph::new(n, edges)
}

fn construction23(n: usize, t: usize, with_completions: bool) -> Result<Hypergraph> {
    let [s1, s2, s3, s4] = check_n(n)?;
    check_t(n, t)?;
    let o2 = s1;
    let o3 = s1 + s2;
    let o4 = o3 + s3;
    let d = t - 1;
    // Distinguished twins: left pairs (i, o2+i) and right pairs (o3+j, o4+j)
    // for indices below d.
    let in_dl = |x: usize| (x < d) || (o2..o2 + d).contains(&x);
    let in_dr = |w: usize| (o3..o3 + d).contains(&w) || (o4..o4 + d).contains(&w);

    let mut edges = Vec::new();
    for i in 0..s1 {
        for w in o3..n {
            if i < d || !in_dr(w) {
                edges.push(vec![i, o2 + i, w]);
            }
        }
    }
    for j in 0..d {
        for x in 0..o3 {
            if !in_dl(x) {
                edges.push(vec![x, o3 + j, o4 + j]);
            }
        }
    }
    if with_completions {
        for i in 0..d {
            for j in 0..d {
                edges.push(vec![i, o3 + j, o4 + j]);
            }
        }
    }
    debug_assert!(s3.min(s4) >= d && s1 >= d);
    Hypergraph::new(n, edges)
}

/// Construction 1 with the first t-1 twin pairs of each side distinguished:
/// a non-distinguished twin pair only meets non-distinguished vertices of the
/// other side, and distinguished right pairs pick up the slack. Same count as
/// construction 1.
pub fn construction2(n: usize, t: usize) -> Result<Hypergraph> {
    construction23(n, t, false)
}

/// Construction 2 plus one completing hyperedge per pair of distinguished
/// left/right twins: the first left-twin vertex joined with the right pair.
/// Adds (t-1)^2 hyperedges.
pub fn construction3(n: usize, t: usize) -> Result<Hypergraph> {
    construction23(n, t, true)
}

pub(crate) fn c4_block_counts(n: usize, r: usize, k: usize) -> Result<(usize, usize)> {
    if r < 2 || k == 0 || k >= r {
        return Err(Error::InvalidParameter(format!(
            "construction needs r >= 2 and 1 <= k <= r-1, got r = {r}, k = {k}"
        )));
    }
    if n < 2 * r {
        return Err(Error::InvalidParameter(format!(
            "construction needs n >= 2r = {}, got {n}",
            2 * r
        )));
    }
    let m = n.div_ceil(2) / k;
    let m2 = (n - k * m) / (r - k);
    if m == 0 || m2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "degenerate block counts at n = {n}, r = {r}, k = {k}"
        )));
    }
    Ok((m, m2))
}

/// r-uniform blocks: every hyperedge is one size-k block from the first half
/// joined with one size-(r-k) block from the rest. Leftover vertices are
/// isolated. Exactly m * m' hyperedges.
pub fn construction4(n: usize, r: usize, k: usize) -> Result<Hypergraph> {
    let (m, m2) = c4_block_counts(n, r, k)?;
    let mut edges = Vec::with_capacity(m * m2);
    for i in 0..m {
        for j in 0..m2 {
            let mut e: Vec<usize> = (i * k..(i + 1) * k).collect();
            e.extend(k * m + j * (r - k)..k * m + (j + 1) * (r - k));
            edges.push(e);
        }
    }
    Hypergraph::new(n, edges)
}

pub(crate) fn c5_layout(n: usize, r: usize, t: usize) -> Result<(usize, usize, usize)> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "construction needs r >= 2, got {r}"
        )));
    }
    if t < 2 || t + 3 <= r {
        return Err(Error::InvalidParameter(format!(
            "construction needs t >= 2 and t > r - 3, got r = {r}, t = {t}"
        )));
    }
    if n < 2 * r {
        return Err(Error::InvalidParameter(format!(
            "construction needs n >= 2r = {}, got {n}",
            2 * r
        )));
    }
    let k = r - 1;
    let m = n.div_ceil(2) / k;
    let right = n - k * m;
    let m2 = right / k;
    if m < t - 1 || m2 < t - 1 || m == 0 || m2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "t = {t} too large: only {m} left and {m2} right blocks at n = {n}, r = {r}"
        )));
    }
    Ok((m, m2, right))
}

/// The distinguished-blocks analogue of construction 3 with block size r-1:
/// left blocks pair with single right vertices, the first t-1 right blocks
/// pair with single left vertices outside the first t-1 left blocks, and one
/// completing hyperedge joins the first vertex of each distinguished left
/// block with each distinguished right block. m * (n - (r-1)m) + (t-1)^2
/// hyperedges.
pub fn construction5(n: usize, r: usize, t: usize) -> Result<Hypergraph> {
    let (m, _, _) = c5_layout(n, r, t)?;
    let k = r - 1;
    let ro = k * m;
    let d = t - 1;
    let mut edges = Vec::new();
    for i in 0..m {
        for w in ro..n {
            if i < d || w >= ro + d * k {
                let mut e: Vec<usize> = (i * k..(i + 1) * k).collect();
                e.push(w);
                edges.push(e);
            }
        }
    }
    for j in 0..d {
        for x in d * k..ro {
            let mut e = vec![x];
            e.extend(ro + j * k..ro + (j + 1) * k);
            edges.push(e);
        }
    }
    for i in 0..d {
        for j in 0..d {
            let mut e = vec![i * k];
            e.extend(ro + j * k..ro + (j + 1) * k);
            edges.push(e);
        }
    }
    Hypergraph::new(n, edges)
}

/// Parameter record for one construction instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionSpec {
    C1 { n: usize },
    C2 { n: usize, t: usize },
    C3 { n: usize, t: usize },
    C4 { n: usize, r: usize, k: usize },
    C5 { n: usize, r: usize, t: usize },
}

impl ConstructionSpec {
    pub fn generate(&self) -> Result<Hypergraph> {
        match *self {
            ConstructionSpec::C1 { n } => construction1(n),
            ConstructionSpec::C2 { n, t } => construction2(n, t),
            ConstructionSpec::C3 { n, t } => construction3(n, t),
            ConstructionSpec::C4 { n, r, k } => construction4(n, r, k),
            ConstructionSpec::C5 { n, r, t } => construction5(n, r, t),
        }
    }

    /// Closed-form hyperedge count; `generate` must agree exactly.
    pub fn expected_size(&self) -> Result<usize> {
        match *self {
            ConstructionSpec::C1 { n } => {
                check_n(n)?;
                Ok(n * n / 8)
            }
            ConstructionSpec::C2 { n, t } => {
                check_n(n)?;
                check_t(n, t)?;
                Ok(n * n / 8)
            }
            ConstructionSpec::C3 { n, t } => {
                check_n(n)?;
                check_t(n, t)?;
                Ok(n * n / 8 + (t - 1) * (t - 1))
            }
            ConstructionSpec::C4 { n, r, k } => {
                let (m, m2) = c4_block_counts(n, r, k)?;
                Ok(m * m2)
            }
            ConstructionSpec::C5 { n, r, t } => {
                let (m, _, right) = c5_layout(n, r, t)?;
                Ok(m * right + (t - 1) * (t - 1))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_layout() {
        assert_eq!(part_sizes(8), [2, 2, 2, 2]);
        assert_eq!(part_sizes(9), [2, 2, 2, 3]);
        assert_eq!(part_sizes(10), [2, 2, 3, 3]);
        assert_eq!(part_sizes(11), [3, 3, 3, 2]);
        for n in 8..40 {
            let s = part_sizes(n);
            assert_eq!(s.iter().sum::<usize>(), n);
            assert_eq!(s[0], s[1]);
        }
    }

    #[test]
    fn construction1_examples() {
        let h = construction1(8).unwrap();
        assert_eq!(h.edge_count(), 8);
        assert_eq!(h.n(), 8);
        assert_eq!(h.uniformity(), Some(3));
        assert_eq!(h.edge(0), &[0, 2, 4]);
        // Twin pair (0,2) lies in all four hyperedges of twin index 0.
        assert_eq!(h.pair_multiplicity(0, 2).unwrap(), 4);
        assert_eq!(h.pair_multiplicity(0, 1).unwrap(), 0);
        assert_eq!(h.shadow_graph().edge_count(), 18);

        assert_eq!(construction1(9).unwrap().edge_count(), 10);
        assert!(construction1(7).is_err());
    }

    #[test]
    fn construction2_examples() {
        let h = construction2(16, 3).unwrap();
        assert_eq!(h.edge_count(), 32);
        // Distinguished left twins still meet every right vertex.
        assert_eq!(h.pair_multiplicity(0, 4).unwrap(), 8);
        // Non-distinguished ones avoid the 4 distinguished right vertices.
        assert_eq!(h.pair_multiplicity(3, 7).unwrap(), 4);
        assert!(construction2(16, 1).is_err());
        assert!(construction2(16, 6).is_err());
        assert!(construction2(16, 5).is_ok());
    }

    #[test]
    fn construction3_examples() {
        let h = construction3(16, 3).unwrap();
        assert_eq!(h.edge_count(), 36);
        assert_eq!(h.uniformity(), Some(3));
        let h2 = construction3(16, 2).unwrap();
        assert_eq!(h2.edge_count(), 33);
    }

    #[test]
    fn construction4_examples() {
        let h = construction4(20, 4, 3).unwrap();
        assert_eq!(h.edge_count(), 33);
        assert_eq!(h.uniformity(), Some(4));
        assert_eq!(construction4(12, 3, 2).unwrap().edge_count(), 18);
        assert_eq!(construction4(10, 5, 4).unwrap().edge_count(), 6);
        assert!(construction4(9, 5, 4).is_err());
        assert!(construction4(12, 3, 3).is_err());
        assert!(construction4(12, 3, 0).is_err());
    }

    #[test]
    fn construction5_examples() {
        assert_eq!(construction5(16, 3, 3).unwrap().edge_count(), 36);
        assert_eq!(construction5(16, 3, 2).unwrap().edge_count(), 33);
        let h = construction5(24, 4, 3).unwrap();
        assert_eq!(h.edge_count(), 52);
        assert_eq!(h.uniformity(), Some(4));
        // t must exceed r - 3.
        assert!(construction5(24, 5, 2).is_err());
        assert!(construction5(24, 5, 3).is_ok());
    }

    #[test]
    fn generated_sizes_match_closed_forms() {
        for n in 8..=40 {
            for spec in [
                ConstructionSpec::C1 { n },
                ConstructionSpec::C2 { n, t: 2 },
                ConstructionSpec::C3 { n, t: 2 },
            ] {
                assert_eq!(
                    spec.generate().unwrap().edge_count(),
                    spec.expected_size().unwrap(),
                    "{spec:?}"
                );
            }
        }
        for (n, r, t) in [(16, 3, 2), (16, 3, 3), (24, 4, 2), (24, 4, 3), (30, 5, 3)] {
            let spec = ConstructionSpec::C5 { n, r, t };
            assert_eq!(
                spec.generate().unwrap().edge_count(),
                spec.expected_size().unwrap(),
                "{spec:?}"
            );
        }
    }

    #[test]
    fn twin_multiplicity_structure() {
        // In construction 1 every hyperedge holds exactly one twin pair; the
        // two cross pairs have multiplicity 1.
        let h = construction1(12).unwrap();
        let [s1, s2, _, _] = part_sizes(12);
        for e in h.edges() {
            let (a, b, w) = (e[0], e[1], e[2]);
            assert_eq!(b, a + s1);
            assert!(w >= s1 + s2);
            assert_eq!(h.pair_multiplicity(a, w).unwrap(), 1);
            assert_eq!(h.pair_multiplicity(b, w).unwrap(), 1);
        }
    }
}
