//! Randomized invariants for classification, partitioning, coloring,
//! counting and serialization.

mod common;

use std::collections::BTreeSet;

use berge_turan::{
    find_berge_copy, parse_hypergraph, verify_witness, write_text, Graph, Hypergraph, Part,
    PatternGraph,
};
use common::{all_triples, random_3uniform, random_graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_3uniform() -> impl Strategy<Value = Hypergraph> {
    (3usize..=7).prop_flat_map(|n| {
        let count = all_triples(n).len();
        prop::collection::vec(any::<bool>(), count).prop_map(move |keep| {
            let edges: Vec<Vec<usize>> = all_triples(n)
                .into_iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(e, _)| e)
                .collect();
            Hypergraph::new(n, edges).unwrap()
        })
    })
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..=8).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let count = pairs.len();
        prop::collection::vec(any::<bool>(), count).prop_map(move |keep| {
            let edges = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn heavy_and_light_split_the_shadow(h in arb_3uniform(), p in 2usize..=5) {
        let cls = h.classify_edges(p).unwrap();
        let shadow: BTreeSet<(usize, usize)> = h.shadow_graph().edges().into_iter().collect();
        let union: BTreeSet<(usize, usize)> = cls.heavy.union(&cls.light).copied().collect();
        prop_assert_eq!(&union, &shadow);
        prop_assert!(cls.heavy.is_disjoint(&cls.light));
        for (pair, &m) in &cls.multiplicity {
            prop_assert!(m >= 1);
            prop_assert_eq!(cls.heavy.contains(pair), m >= p);
        }
        // Raising the threshold only demotes edges.
        let stricter = h.classify_edges(p + 1).unwrap();
        prop_assert!(stricter.heavy.is_subset(&cls.heavy));
    }

    #[test]
    fn partition_is_exhaustive_and_consistent(h in arb_3uniform(), p in 2usize..=4) {
        let part = h.partition(p).unwrap();
        prop_assert_eq!(part.part_of.len(), h.edge_count());
        let mult = |u: usize, v: usize| h.pair_multiplicity(u, v).unwrap();
        for (idx, e) in h.edges().iter().enumerate() {
            let ms = [mult(e[0], e[1]), mult(e[0], e[2]), mult(e[1], e[2])];
            let qualifies =
                ms.iter().filter(|&&m| m >= 2).count() >= 2 && ms.iter().any(|&m| m < p);
            match part.part_of[idx] {
                Part::H1 => {
                    prop_assert!(qualifies);
                    let tri = part.chosen_triangle[&idx];
                    prop_assert_eq!(tri.to_vec(), e.clone());
                    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                        prop_assert!(part.g1.has_edge(tri[a], tri[b]));
                    }
                }
                Part::H2 => {
                    prop_assert!(ms.iter().all(|&m| m >= p));
                    prop_assert!(!qualifies);
                }
                Part::H3 => {
                    prop_assert!(!qualifies);
                    prop_assert!(ms.iter().any(|&m| m < p));
                    // A hyperedge on three vertices that avoids H1 has at
                    // most one pair of multiplicity >= 2.
                    prop_assert!(ms.iter().filter(|&&m| m == 1).count() >= 2);
                }
            }
        }
        for (u, v) in part.g3.edges() {
            prop_assert_eq!(mult(u, v), 1);
        }
    }

    #[test]
    fn coloring_covers_h3_and_respects_blue(h in arb_3uniform(), p in 2usize..=4) {
        let col = h.color_shadow(p).unwrap();
        let part = h.partition(p).unwrap();
        prop_assert!(col.red.is_disjoint(&col.blue));
        for pair in &col.red {
            prop_assert_eq!(h.pair_multiplicity(pair.0, pair.1).unwrap(), 1);
        }
        let mut expected_blue = BTreeSet::new();
        for (idx, e) in h.edges().iter().enumerate() {
            let pairs = [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])];
            match part.part_of[idx] {
                Part::H1 | Part::H2 => expected_blue.extend(pairs),
                Part::H3 => {
                    let colored = pairs
                        .iter()
                        .filter(|pr| col.red.contains(pr) || col.blue.contains(pr))
                        .count();
                    prop_assert!(colored >= 2, "H3 hyperedge {e:?} has {colored} colored pairs");
                }
            }
        }
        prop_assert_eq!(&col.blue, &expected_blue);
    }

    #[test]
    fn single_edge_copy_count_is_the_edge_count(g in arb_graph()) {
        let k2 = PatternGraph::clique(2).unwrap();
        prop_assert_eq!(k2.count_copies(&g), g.edge_count() as u64);
    }

    #[test]
    fn text_and_json_round_trips_are_canonical(h in arb_3uniform()) {
        let text = write_text(&h);
        let back = parse_hypergraph(&text).unwrap();
        prop_assert_eq!(write_text(&back), text.clone());
        let js = berge_turan::write_json(&h);
        let back = parse_hypergraph(&js).unwrap();
        prop_assert_eq!(berge_turan::write_json(&back), js);
        prop_assert_eq!(write_text(&back), text);
    }

    #[test]
    fn detected_copies_always_verify(h in arb_3uniform()) {
        for pattern in [PatternGraph::clique(3).unwrap(), PatternGraph::book(2).unwrap()] {
            if let Some(w) = find_berge_copy(&h, &pattern) {
                prop_assert!(verify_witness(&h, &pattern, &w));
            }
        }
    }

    #[test]
    fn embedding_exists_iff_copy_count_is_positive(g in arb_graph(), which in 0usize..4) {
        let pattern = match which {
            0 => PatternGraph::clique(3).unwrap(),
            1 => PatternGraph::clique(4).unwrap(),
            2 => PatternGraph::book(2).unwrap(),
            _ => PatternGraph::fan(2).unwrap(),
        };
        let found = pattern.find_embedding(&g);
        prop_assert_eq!(found.is_some(), pattern.count_copies(&g) > 0);
        if let Some(map) = found {
            let mut seen = BTreeSet::new();
            for &img in &map {
                prop_assert!(img < g.n());
                prop_assert!(seen.insert(img));
            }
            for &(pu, pv) in pattern.edges() {
                prop_assert!(g.has_edge(map[pu], map[pv]));
            }
        }
    }
}

#[test]
fn partition_is_exhaustive_on_a_thousand_random_hypergraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b9);
    for _ in 0..1000 {
        let n = rng.gen_range(3..=8);
        let density = rng.gen_range(0.05..0.6);
        let h = random_3uniform(&mut rng, n, density);
        let p = rng.gen_range(2..=4);
        let part = h.partition(p).unwrap();
        assert_eq!(
            part.size_of(Part::H1) + part.size_of(Part::H2) + part.size_of(Part::H3),
            h.edge_count()
        );
        // g1/g2/g3 only mention vertices of hyperedges in their part.
        for &idx in &part.part_indices(Part::H1) {
            assert!(part.chosen_triangle.contains_key(&idx));
        }
        assert_eq!(part.chosen_triangle.len(), part.size_of(Part::H1));
    }
}

#[test]
fn red_pairs_stay_inside_their_h3_hyperedge() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdecafbad);
    for _ in 0..500 {
        let n = rng.gen_range(3..=8);
        let h = random_3uniform(&mut rng, n, 0.3);
        let p = rng.gen_range(2..=3);
        let col = h.color_shadow(p).unwrap();
        let part = h.partition(p).unwrap();
        let h3: Vec<usize> = part.part_indices(Part::H3);
        for pair in &col.red {
            let holder = h3.iter().any(|&idx| {
                let e = h.edge(idx);
                e.contains(&pair.0) && e.contains(&pair.1)
            });
            assert!(holder, "red pair {pair:?} lies in no H3 hyperedge");
        }
    }
}

#[test]
fn counting_matches_oracle_on_random_graphs() {
    // Spot check beyond the acceptance sweep: the full pattern menu against
    // the naive injection counter on a handful of seeds.
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let menu: Vec<(PatternGraph, u64)> = vec![
        (PatternGraph::clique(3).unwrap(), 6),
        (PatternGraph::book(2).unwrap(), 4),
        (PatternGraph::fan(2).unwrap(), 8),
    ];
    for _ in 0..40 {
        let n = rng.gen_range(2..=8);
        let density = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, density);
        for (pattern, aut) in &menu {
            assert_eq!(
                pattern.count_copies(&g),
                common::naive_count_copies(pattern, *aut, &g),
                "pattern {} on {:?}",
                pattern.spec_string(),
                g.edges()
            );
        }
    }
}
