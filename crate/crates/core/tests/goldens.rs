//! Frozen expected outputs for the exact search and the small-case bound
//! quantities. Regenerate with UPDATE_GOLDENS=1 after an intentional change;
//! diffs in `explored` or in witnesses signal a behavioral change even when
//! the optimum value is stable.

mod common;

use std::fs;
use std::path::PathBuf;

use berge_turan::{
    bena_rhs, brute_gen_turan, brute_turan, exact_berge_turan, find_berge_copy, parse_hypergraph,
    write_json, PatternGraph,
};
use serde_json::{json, Value};

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/goldens")
        .join(name)
}

fn check_or_update(name: &str, actual: Value) {
    let path = golden_path(name);
    let pretty = serde_json::to_string_pretty(&actual).unwrap() + "\n";
    if std::env::var_os("UPDATE_GOLDENS").is_some() {
        fs::write(&path, pretty).unwrap();
        return;
    }
    let stored = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden {name} ({e}); run with UPDATE_GOLDENS=1"));
    let expected: Value = serde_json::from_str(&stored).unwrap();
    assert_eq!(expected, actual, "golden {name} drifted");
}

#[test]
fn search_results_are_frozen() {
    for n in [4usize, 5, 6] {
        for spec in ["clique:3", "book:2"] {
            let f = PatternGraph::parse_spec(spec).unwrap();
            let res = exact_berge_turan(n, 3, &f, None).unwrap();
            assert!(res.exhausted);
            // The maximizer must itself be free of the forbidden pattern.
            assert!(find_berge_copy(&res.witness, &f).is_none());
            assert_eq!(res.witness.edge_count(), res.value);
            let actual = json!({
                "n": n,
                "r": 3,
                "pattern": spec,
                "value": res.value,
                "explored": res.explored,
                "exhausted": res.exhausted,
                "witness": serde_json::from_str::<Value>(&write_json(&res.witness)).unwrap(),
            });
            let name = format!("search_n{n}_r3_{}.json", spec.replace(':', ""));
            check_or_update(&name, actual);
        }
    }
}

#[test]
fn small_case_bound_quantities_are_frozen() {
    let k3 = PatternGraph::clique(3).unwrap();
    let b2 = PatternGraph::book(2).unwrap();
    let rat = |q: berge_turan::Rational| berge_turan::format::rational_string(&q);
    let actual = json!({
        "graph_turan": {
            "ex(5, clique:3)": brute_turan(5, &k3).unwrap(),
            "ex(5, book:2)": brute_turan(5, &b2).unwrap(),
            "ex(6, clique:3)": brute_turan(6, &k3).unwrap(),
            "ex(6, book:2)": brute_turan(6, &b2).unwrap(),
        },
        "generalized_turan": {
            "ex(5, clique:3, book:2)": brute_gen_turan(5, &k3, &b2).unwrap(),
            "ex(6, clique:3, book:2)": brute_gen_turan(6, &k3, &b2).unwrap(),
            "ex(6, clique:4, book:2)": brute_gen_turan(6, &PatternGraph::clique(4).unwrap(), &b2).unwrap(),
        },
        "upper_bound_rhs": {
            "(5, 3, clique:3)": rat(bena_rhs(5, 3, &k3).unwrap()),
            "(5, 3, book:2)": rat(bena_rhs(5, 3, &b2).unwrap()),
            "(6, 3, book:2)": rat(bena_rhs(6, 3, &b2).unwrap()),
        },
    });
    check_or_update("bound_quantities.json", actual);
}

#[test]
fn goldens_parse_back_and_verify() {
    if std::env::var_os("UPDATE_GOLDENS").is_some() {
        return;
    }
    for n in [4usize, 5, 6] {
        for spec in ["clique:3", "book:2"] {
            let name = format!("search_n{n}_r3_{}.json", spec.replace(':', ""));
            let stored = fs::read_to_string(golden_path(&name)).unwrap();
            let doc: Value = serde_json::from_str(&stored).unwrap();
            let f = PatternGraph::parse_spec(spec).unwrap();
            let witness = parse_hypergraph(&doc["witness"].to_string()).unwrap();
            assert_eq!(witness.edge_count() as u64, doc["value"].as_u64().unwrap());
            assert!(find_berge_copy(&witness, &f).is_none());
            assert!(!common::brute_berge_present(&witness, &f));
        }
    }
}
