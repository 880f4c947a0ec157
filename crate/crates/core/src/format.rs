//! Reading and writing hypergraphs, plus JSON views of witnesses and
//! reports.
//!
//! Two interchangeable encodings. Text:
//!
//! ```text
//! n
//! v1 v2 ... vk     (one hyperedge per line, strictly ascending)
//! ```
//!
//! JSON: `{"n": 6, "edges": [[0,1,2], ...]}`. Sniffing is by first
//! non-whitespace byte: `{` means JSON. Writing always canonicalizes, so
//! parse-write round trips are stable regardless of input edge order.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::berge::BergeWitness;
use crate::error::{Error, Result};
use crate::extremal::{BoundReport, Rational, SearchResult};
use crate::hypergraph::Hypergraph;
use crate::patterns::PatternGraph;

pub fn parse_hypergraph(input: &str) -> Result<Hypergraph> {
    match input.trim_start().chars().next() {
        Some('{') => parse_json(input),
        Some(_) => parse_text(input),
        None => Err(Error::Parse {
            line: 1,
            msg: "empty input".into(),
        }),
    }
}

fn parse_text(input: &str) -> Result<Hypergraph> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header line".into(),
    })?;
    let parse_int = |line: usize, tok: &str| -> Result<usize> {
        tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad integer {tok:?}"),
        })
    };
    let mut header_toks = header.split_whitespace();
    let n = parse_int(
        header_line,
        header_toks.next().ok_or(Error::Parse {
            line: header_line,
            msg: "missing vertex count".into(),
        })?,
    )?;
    if header_toks.next().is_some() {
        return Err(Error::Parse {
            line: header_line,
            msg: "header must be a single vertex count".into(),
        });
    }

    let mut edges = Vec::new();
    for (line, text) in lines {
        let edge = text
            .split_whitespace()
            .map(|tok| parse_int(line, tok))
            .collect::<Result<Vec<usize>>>()?;
        if edge.len() < 2 {
            return Err(Error::Parse {
                line,
                msg: "hyperedge needs at least two vertices".into(),
            });
        }
        for w in edge.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Parse {
                    line,
                    msg: format!("repeated vertex {}", w[0]),
                });
            }
            if w[0] > w[1] {
                return Err(Error::Parse {
                    line,
                    msg: "vertices must be strictly ascending".into(),
                });
            }
        }
        if let Some(&v) = edge.iter().find(|&&v| v >= n) {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} out of range for n = {n}"),
            });
        }
        if edges.contains(&edge) {
            return Err(Error::Parse {
                line,
                msg: "duplicate hyperedge".into(),
            });
        }
        edges.push(edge);
    }
    Hypergraph::new(n, edges)
}

#[derive(Deserialize)]
struct HypergraphDoc {
    n: usize,
    edges: Vec<Vec<usize>>,
}

fn parse_json(input: &str) -> Result<Hypergraph> {
    let doc: HypergraphDoc = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    // Surface structural mistakes with the 1-based ordinal of the bad edge.
    for (i, edge) in doc.edges.iter().enumerate() {
        let line = i + 1;
        if edge.len() < 2 {
            return Err(Error::Parse {
                line,
                msg: "hyperedge needs at least two vertices".into(),
            });
        }
        let mut sorted = edge.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                line,
                msg: "repeated vertex in hyperedge".into(),
            });
        }
        if let Some(&v) = edge.iter().find(|&&v| v >= doc.n) {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} out of range for n = {}", doc.n),
            });
        }
    }
    Hypergraph::new(doc.n, doc.edges)
}

pub fn write_text(h: &Hypergraph) -> String {
    let canon = h.canonicalized();
    let mut out = format!("{}\n", canon.n());
    for edge in canon.edges() {
        let toks: Vec<String> = edge.iter().map(|v| v.to_string()).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}

pub fn hypergraph_json(h: &Hypergraph) -> Value {
    let canon = h.canonicalized();
    json!({ "n": canon.n(), "edges": canon.edges() })
}

pub fn write_json(h: &Hypergraph) -> String {
    hypergraph_json(h).to_string()
}

/// Rationals render as "a" when integral, "a/b" otherwise, keeping report
/// output exact.
pub fn rational_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn witness_to_json(pattern: &PatternGraph, w: &BergeWitness) -> Value {
    let embedding: Vec<Value> = w
        .embedding
        .iter()
        .enumerate()
        .map(|(pv, &hv)| json!([pv, hv]))
        .collect();
    let assignment: Vec<Value> = pattern
        .edges()
        .iter()
        .zip(&w.assignment)
        .map(|(&(u, v), &idx)| json!([[u, v], idx]))
        .collect();
    json!({
        "pattern": pattern.spec_string(),
        "embedding": embedding,
        "assignment": assignment,
    })
}

pub fn report_to_json(rep: &BoundReport) -> Value {
    let mut params = serde_json::Map::new();
    let mut put = |key: &str, v: Option<usize>| {
        if let Some(v) = v {
            params.insert(key.into(), json!(v));
        }
    };
    put("n", rep.params.n);
    put("r", rep.params.r);
    put("p", rep.params.p);
    put("k", rep.params.k);
    if let Some(pat) = &rep.params.pattern {
        params.insert("pattern".into(), json!(pat));
    }
    json!({
        "name": rep.name,
        "lhs": rational_string(&rep.lhs),
        "rhs": rational_string(&rep.rhs),
        "holds": rep.holds,
        "params": Value::Object(params),
    })
}

pub fn search_result_to_json(res: &SearchResult) -> Value {
    json!({
        "value": res.value,
        "witness": hypergraph_json(&res.witness),
        "explored": res.explored,
        "exhausted": res.exhausted,
    })
}
