//! Test corpus and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use rand::Rng;
use signed_distance::{Sign, SignedGraph};

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn pair_bit(i: usize, j: usize) -> u64 {
    let (a, b) = (i.min(j), i.max(j));
    1u64 << (b * (b - 1) / 2 + a)
}

fn code(n: usize, edges: &[(usize, usize)], perm: &[usize]) -> u64 {
    let _ = n;
    edges.iter().map(|&(u, v)| pair_bit(perm[u], perm[v])).fold(0, |a, b| a | b)
}

fn canonical(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| code(n, edges, p)).min().unwrap()
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, as all-positive signed graphs.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// the classes on `n` vertices arise from those on `n − 1` by attaching a new
/// vertex to a nonempty neighbor set.
pub fn connected_graphs(n: usize) -> Vec<SignedGraph> {
    assert!((1..=7).contains(&n));
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for k in 2..=n {
        let perms = permutations(k);
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &level {
            for mask in 1u32..(1 << (k - 1)) {
                let mut edges = base.clone();
                edges.extend((0..k - 1).filter(|&v| mask & (1 << v) != 0).map(|v| (v, k - 1)));
                if seen.insert(canonical(k, &edges, &perms)) {
                    next.push(edges);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|edges| SignedGraph::all_positive(n, edges).unwrap())
        .collect()
}

/// Connected graphs on `1..=max_n` vertices up to isomorphism.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<SignedGraph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

pub fn random_signs<R: Rng>(rng: &mut R, m: usize) -> Vec<Sign> {
    (0..m).map(|_| Sign::from_bool(rng.gen_bool(0.5))).collect()
}

/// Every signature of `g`, enumerated by bitmask over the edge list.
pub fn all_signatures(g: &SignedGraph) -> impl Iterator<Item = SignedGraph> + '_ {
    let m = g.size();
    (0u64..(1 << m)).map(move |mask| {
        let signs: Vec<Sign> = (0..m).map(|i| Sign::from_bool(mask & (1 << i) == 0)).collect();
        g.with_signs(&signs)
    })
}

/// Random connected graph: a random spanning tree plus each other pair with
/// probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let signs = random_signs(rng, edges.len());
    SignedGraph::new(n, edges.into_iter().zip(signs).map(|((u, v), s)| (u, v, s))).unwrap()
}

/// Signed graph from an edge bitmask over the pairs of `0..n` plus a sign
/// bitmask; `None` if disconnected.
pub fn graph_from_masks(n: usize, edge_mask: u64, sign_mask: u64) -> Option<SignedGraph> {
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if edge_mask & (1 << bit) != 0 {
                let s = Sign::from_bool(sign_mask & (1 << edges.len()) == 0);
                edges.push((u, v, s));
            }
            bit += 1;
        }
    }
    SignedGraph::new(n, edges).ok()
}

/// All simple `u`–`v` paths by exhaustive DFS, keeping those of minimum
/// length. Independent of any BFS layering.
pub fn brute_force_shortest_paths(g: &SignedGraph, u: usize, v: usize) -> Vec<(Vec<usize>, Sign)> {
    fn dfs(
        g: &SignedGraph,
        target: usize,
        path: &mut Vec<usize>,
        sign: Sign,
        on_path: &mut Vec<bool>,
        best: &mut Vec<(Vec<usize>, Sign)>,
    ) {
        let x = *path.last().unwrap();
        if x == target {
            match best.first() {
                Some((p, _)) if p.len() < path.len() => {}
                Some((p, _)) if p.len() == path.len() => best.push((path.clone(), sign)),
                _ => {
                    best.clear();
                    best.push((path.clone(), sign));
                }
            }
            return;
        }
        if let Some((p, _)) = best.first() {
            if path.len() >= p.len() {
                return;
            }
        }
        for &(y, s) in g.neighbors(x) {
            if !on_path[y] {
                on_path[y] = true;
                path.push(y);
                dfs(g, target, path, sign * s, on_path, best);
                path.pop();
                on_path[y] = false;
            }
        }
    }
    let mut best = Vec::new();
    let mut on_path = vec![false; g.order()];
    on_path[u] = true;
    dfs(g, v, &mut vec![u], Sign::Plus, &mut on_path, &mut best);
    best.sort();
    best
}

/// Characteristic polynomial coefficients (highest degree first) of an
/// integer matrix by the Faddeev–LeVerrier recursion.
pub fn faddeev_leverrier(n: usize, a: &[i64]) -> Vec<i128> {
    let a: Vec<i128> = a.iter().map(|&x| x as i128).collect();
    let mul = |x: &[i128], y: &[i128]| -> Vec<i128> {
        let mut out = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let xik = x[i * n + k];
                if xik != 0 {
                    for j in 0..n {
                        out[i * n + j] += xik * y[k * n + j];
                    }
                }
            }
        }
        out
    };
    let mut coeffs = vec![1i128];
    let mut m = vec![0i128; n * n];
    for k in 1..=n {
        let mut next = mul(&a, &m);
        let c_prev = *coeffs.last().unwrap();
        for i in 0..n {
            next[i * n + i] += c_prev;
        }
        m = next;
        let am = mul(&a, &m);
        let tr: i128 = (0..n).map(|i| am[i * n + i]).sum();
        assert_eq!(tr % k as i128, 0);
        coeffs.push(-tr / k as i128);
    }
    coeffs
}

/// Sorted eigenvalues from nalgebra's symmetric eigensolver.
pub fn nalgebra_eigenvalues(n: usize, data: &[f64]) -> Vec<f64> {
    let m = nalgebra::DMatrix::from_row_slice(n, n, data);
    let mut v: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

/// Whether the vertex set minus `x` still induces a connected graph.
pub fn is_cut_vertex(g: &SignedGraph, x: usize) -> bool {
    let rest: Vec<usize> = (0..g.order()).filter(|&v| v != x).collect();
    !rest.is_empty() && g.induced(&rest).is_err()
}
