//! Shortest-path sign analysis.
//!
//! For a source `s`, a BFS fixes the hop distances and thus the shortest-path
//! DAG (edges `x → y` with `dist(y) = dist(x) + 1`). Walking the DAG in layer
//! order propagates two reachability bits per vertex: whether some shortest
//! path from `s` arrives positive and whether some arrives negative. From these
//! bits `σ_max(s, v)` is `−1` exactly when only the negative bit is set and
//! `σ_min(s, v)` is `+1` exactly when only the positive bit is set.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::SignedGraph;
use crate::sign::Sign;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistanceError {
    #[error("vertex {} out of range 1..={n}", .vertex.wrapping_add(1))]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("more than {cap} shortest paths")]
    PathExplosion { cap: usize },
}

fn check_vertex(g: &SignedGraph, v: usize) -> Result<(), DistanceError> {
    if v < g.order() {
        Ok(())
    } else {
        Err(DistanceError::VertexOutOfRange { vertex: v, n: g.order() })
    }
}

/// Single-source result of [`sign_bfs`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignReachTable {
    pub source: usize,
    pub dist: Vec<usize>,
    /// Some shortest path from `source` is positive.
    pub plus_reach: Vec<bool>,
    /// Some shortest path from `source` is negative.
    pub minus_reach: Vec<bool>,
    /// Number of distinct shortest paths from `source`.
    pub path_count: Vec<BigUint>,
}

impl SignReachTable {
    pub fn sigma_max(&self, v: usize) -> Sign {
        Sign::from_bool(self.plus_reach[v])
    }

    pub fn sigma_min(&self, v: usize) -> Sign {
        Sign::from_bool(!self.minus_reach[v])
    }

    pub fn is_compatible(&self, v: usize) -> bool {
        !(self.plus_reach[v] && self.minus_reach[v])
    }

    pub fn pair(&self, v: usize) -> PairDistance {
        PairDistance::new(self.source, v, self.dist[v], self.sigma_max(v), self.sigma_min(v))
    }
}

pub fn sign_bfs(g: &SignedGraph, source: usize) -> Result<SignReachTable, DistanceError> {
    check_vertex(g, source)?;
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([source]);
    dist[source] = 0;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &(y, _) in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }

    let mut plus_reach = vec![false; n];
    let mut minus_reach = vec![false; n];
    let mut path_count = vec![BigUint::zero(); n];
    plus_reach[source] = true;
    path_count[source] = BigUint::one();

    // BFS order is a topological order of the shortest-path DAG.
    for &x in &order {
        for &(y, s) in g.neighbors(x) {
            if dist[y] != dist[x] + 1 {
                continue;
            }
            let (plus, minus) = match s {
                Sign::Plus => (plus_reach[x], minus_reach[x]),
                Sign::Minus => (minus_reach[x], plus_reach[x]),
            };
            plus_reach[y] |= plus;
            minus_reach[y] |= minus;
            let add = path_count[x].clone();
            path_count[y] += add;
        }
    }

    Ok(SignReachTable {
        source,
        dist,
        plus_reach,
        minus_reach,
        path_count,
    })
}

/// Signed distances between two vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairDistance {
    pub u: usize,
    pub v: usize,
    pub d: usize,
    pub sigma_max: Sign,
    pub sigma_min: Sign,
    pub d_max: i64,
    pub d_min: i64,
}

impl PairDistance {
    fn new(u: usize, v: usize, d: usize, sigma_max: Sign, sigma_min: Sign) -> Self {
        let d_signed = d as i64;
        PairDistance {
            u,
            v,
            d,
            sigma_max,
            sigma_min,
            d_max: sigma_max.value() * d_signed,
            d_min: sigma_min.value() * d_signed,
        }
    }

    pub fn is_compatible(&self) -> bool {
        self.sigma_max == self.sigma_min
    }
}

pub fn pair_distance(g: &SignedGraph, u: usize, v: usize) -> Result<PairDistance, DistanceError> {
    check_vertex(g, v)?;
    Ok(sign_bfs(g, u)?.pair(v))
}

/// One sign table per source vertex.
pub fn all_sign_tables(g: &SignedGraph) -> Vec<SignReachTable> {
    (0..g.order())
        .map(|s| sign_bfs(g, s).expect("source in range"))
        .collect()
}

/// Every pair of vertices is joined by a unique shortest path. Ignores signs.
pub fn is_geodetic(g: &SignedGraph) -> bool {
    let one = BigUint::one();
    all_sign_tables(g)
        .iter()
        .all(|t| t.path_count.iter().all(|c| *c == one))
}

pub fn compatible_pair(g: &SignedGraph, u: usize, v: usize) -> Result<bool, DistanceError> {
    check_vertex(g, v)?;
    Ok(sign_bfs(g, u)?.is_compatible(v))
}

/// First incompatible pair `(u, v)` with `u < v` in lexicographic order.
pub fn incompatible_witness(g: &SignedGraph) -> Option<(usize, usize)> {
    (0..g.order()).find_map(|u| {
        let t = sign_bfs(g, u).expect("source in range");
        (u + 1..g.order()).find(|&v| !t.is_compatible(v)).map(|v| (u, v))
    })
}

/// All incompatible pairs `(u, v)` with `u < v`, lexicographically.
pub fn incompatible_pairs(g: &SignedGraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.order() {
        let t = sign_bfs(g, u).expect("source in range");
        out.extend((u + 1..g.order()).filter(|&v| !t.is_compatible(v)).map(|v| (u, v)));
    }
    out
}

/// `D^max = D^min`: every pair is compatible.
pub fn is_compatible(g: &SignedGraph) -> bool {
    incompatible_witness(g).is_none()
}

/// Hop distances from `source` by plain BFS.
pub fn bfs_distances(g: &SignedGraph, source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for &(y, _) in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

pub const DEFAULT_PATH_CAP: usize = 1_000_000;

/// Lists every shortest `u`–`v` path with its sign, in lexicographic vertex
/// order. Intended as a brute-force check on small graphs.
pub fn enumerate_shortest_paths(
    g: &SignedGraph,
    u: usize,
    v: usize,
    cap: usize,
) -> Result<Vec<(Vec<usize>, Sign)>, DistanceError> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    let from_u = bfs_distances(g, u);
    let from_v = bfs_distances(g, v);
    let d = from_u[v];

    let mut out = Vec::new();
    let mut path = vec![u];
    // (vertex, index into its neighbor list)
    let mut stack: Vec<(usize, usize)> = vec![(u, 0)];
    let mut signs: Vec<Sign> = vec![Sign::Plus];

    while let Some((x, i)) = stack.last().copied() {
        if x == v {
            if out.len() == cap {
                return Err(DistanceError::PathExplosion { cap });
            }
            out.push((path.clone(), *signs.last().unwrap()));
            stack.pop();
            path.pop();
            signs.pop();
            continue;
        }
        let nbrs = g.neighbors(x);
        match nbrs[i..]
            .iter()
            .position(|&(y, _)| from_u[y] == from_u[x] + 1 && from_u[y] + from_v[y] == d)
        {
            Some(off) => {
                let (y, s) = nbrs[i + off];
                stack.last_mut().unwrap().1 = i + off + 1;
                stack.push((y, 0));
                path.push(y);
                signs.push(*signs.last().unwrap() * s);
            }
            None => {
                stack.pop();
                path.pop();
                signs.pop();
            }
        }
    }
    Ok(out)
}
