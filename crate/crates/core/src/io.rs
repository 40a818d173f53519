//! Edge-list text format.
//!
//! ```text
//! # comment
//! n m
//! u v s      (m lines, 1 <= u,v <= n, s in {+, -, +1, -1})
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::graph::{GraphError, SignedGraph};
use crate::sign::Sign;

pub fn parse(text: &str) -> Result<SignedGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(GraphError::Syntax {
        line: 0,
        message: "missing \"n m\" header".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(syntax(header_line, "header must be \"n m\""));
    };
    let n = parse_count(header_line, n)?;
    let m = parse_count(header_line, m)?;

    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [u, v, s] = fields[..] else {
            return Err(syntax(line, "edge line must be \"u v s\""));
        };
        let u = parse_vertex(line, u, n)?;
        let v = parse_vertex(line, v, n)?;
        let sign: Sign = s.parse().map_err(|_| GraphError::BadSign {
            line,
            token: s.to_string(),
        })?;
        edges.push((u, v, sign));
    }
    if edges.len() != m {
        return Err(syntax(
            header_line,
            &format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    SignedGraph::new(n, edges)
}

fn syntax(line: usize, message: &str) -> GraphError {
    GraphError::Syntax {
        line,
        message: message.to_string(),
    }
}

fn parse_count(line: usize, tok: &str) -> Result<usize, GraphError> {
    tok.parse()
        .map_err(|_| syntax(line, &format!("expected a nonnegative integer, got {tok:?}")))
}

fn parse_vertex(line: usize, tok: &str, n: usize) -> Result<usize, GraphError> {
    let x = parse_count(line, tok)?;
    if x == 0 || x > n {
        return Err(GraphError::VertexOutOfRange {
            vertex: x.wrapping_sub(1),
            n,
        });
    }
    Ok(x - 1)
}

/// Writes `g` in the edge-list format, edges in construction order.
pub fn emit(g: &SignedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u + 1, e.v + 1, e.sign).unwrap();
    }
    out
}
