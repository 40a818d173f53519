//! Generators for the signed graph families used throughout the crate.

use thiserror::Error;

use crate::blocks::blocks;
use crate::graph::SignedGraph;
use crate::sign::Sign;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("bad family parameter: {0}")]
    BadFamilyParam(String),
}

#[derive(Clone, Debug)]
pub enum Family {
    /// Cycle `1..n` whose only negative edge is `{n, 1}`; `n` odd.
    UnbalancedCycle(usize),
    /// Wheel `C_n ∨ K_1` with all-negative rim and positive spokes; hub is the last vertex; `n` odd.
    NegRimWheel(usize),
    /// All-positive `K_{p,q}` with parts `0..p` and `p..p+q`.
    CompleteBipartite(usize, usize),
    /// `P` all-positive on part A, `Q` all-negative on part B, joined by an
    /// all-positive complete bipartite graph. `P` and `Q` must be 2-connected,
    /// incomplete and non-bipartite; their signs are ignored.
    Example5(SignedGraph, SignedGraph),
}

pub fn gen_family(family: &Family) -> Result<SignedGraph, FamilyError> {
    match *family {
        Family::UnbalancedCycle(n) => unbalanced_cycle(n),
        Family::NegRimWheel(n) => neg_rim_wheel(n),
        Family::CompleteBipartite(p, q) => complete_bipartite(p, q),
        Family::Example5(ref p, ref q) => example5(p, q),
    }
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::BadFamilyParam(msg.into())
}

fn rim(n: usize, sign: Sign) -> impl Iterator<Item = (usize, usize, Sign)> {
    (0..n).map(move |i| (i, (i + 1) % n, sign))
}

/// Cycle on `n ≥ 3` vertices with every edge signed `sign`.
pub fn cycle(n: usize, sign: Sign) -> Result<SignedGraph, FamilyError> {
    if n < 3 {
        return Err(bad(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(SignedGraph::new(n, rim(n, sign)).unwrap())
}

pub fn unbalanced_cycle(n: usize) -> Result<SignedGraph, FamilyError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(bad(format!("unbalanced cycle needs odd n >= 3, got {n}")));
    }
    let edges = rim(n, Sign::Plus).map(|(u, v, s)| if v == 0 { (u, v, Sign::Minus) } else { (u, v, s) });
    Ok(SignedGraph::new(n, edges).unwrap())
}

pub fn neg_rim_wheel(n: usize) -> Result<SignedGraph, FamilyError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(bad(format!("negative-rim wheel needs odd n >= 3, got {n}")));
    }
    let spokes = (0..n).map(|i| (i, n, Sign::Plus));
    Ok(SignedGraph::new(n + 1, rim(n, Sign::Minus).chain(spokes)).unwrap())
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<SignedGraph, FamilyError> {
    if p == 0 || q == 0 {
        return Err(bad(format!("complete bipartite needs p, q >= 1, got ({p}, {q})")));
    }
    let edges = (0..p).flat_map(|a| (0..q).map(move |b| (a, p + b)));
    Ok(SignedGraph::all_positive(p + q, edges).unwrap())
}

pub fn complete(n: usize) -> Result<SignedGraph, FamilyError> {
    if n == 0 {
        return Err(bad("complete graph needs n >= 1"));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(SignedGraph::all_positive(n, edges).unwrap())
}

/// Complement of the line graph of `K_m`: 2-subsets of `0..m`, adjacent when
/// disjoint. `m = 5` is the Petersen graph.
pub fn complement_line_graph_complete(m: usize) -> Result<SignedGraph, FamilyError> {
    if m < 4 {
        return Err(bad(format!("complement of L(K_m) is disconnected or empty for m = {m}")));
    }
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    SignedGraph::all_positive(pairs.len(), edges)
        .map_err(|e| bad(format!("complement of L(K_{m}): {e}")))
}

fn check_example5_part(name: &str, g: &SignedGraph) -> Result<(), FamilyError> {
    if g.order() < 3 || blocks(g).blocks.len() != 1 {
        return Err(bad(format!("{name} must be 2-connected")));
    }
    if g.is_complete() {
        return Err(bad(format!("{name} must be incomplete")));
    }
    if g.is_bipartite() {
        return Err(bad(format!("{name} must not be bipartite")));
    }
    Ok(())
}

pub fn example5(p: &SignedGraph, q: &SignedGraph) -> Result<SignedGraph, FamilyError> {
    check_example5_part("P", p)?;
    check_example5_part("Q", q)?;
    let (np, nq) = (p.order(), q.order());
    let mut edges: Vec<(usize, usize, Sign)> = p.edges().iter().map(|e| (e.u, e.v, Sign::Plus)).collect();
    edges.extend(q.edges().iter().map(|e| (np + e.u, np + e.v, Sign::Minus)));
    edges.extend((0..np).flat_map(|a| (0..nq).map(move |b| (a, np + b, Sign::Plus))));
    Ok(SignedGraph::new(np + nq, edges).unwrap())
}
