//! Balance, antibalance and the spectral balance criteria.

use std::collections::VecDeque;

use serde::Serialize;

use crate::distance::{is_compatible, is_geodetic};
use crate::graph::SignedGraph;
use crate::matrix::{
    adjacency_matrix, associated_complete, d_max_min_matrices, unsigned_distance_matrix, Extremal, SymMatrix,
};
use crate::sign::Sign;
use crate::spectra::{eig_sym, Spectrum, DEFAULT_TOL};

/// Tolerance for comparing spectra in the spectral criteria.
pub const SPECTRAL_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub balanced: bool,
    /// Switching function that makes every edge positive, when balanced.
    /// `V1` is the set of `+` vertices.
    pub zeta: Option<Vec<Sign>>,
    /// Negative cycle as a vertex sequence, when unbalanced.
    pub witness: Option<Vec<usize>>,
}

impl BalanceReport {
    /// Harary bipartition `(V1, V2)`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        self.zeta.as_ref().map(|z| {
            let (v1, v2): (Vec<usize>, Vec<usize>) = (0..z.len()).partition(|&v| z[v] == Sign::Plus);
            (v1, v2)
        })
    }

    /// `{"balanced":bool, "V1":[...], "V2":[...], "witness":[...]}`, 1-indexed.
    /// Absent parts are empty lists.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc {
            balanced: bool,
            #[serde(rename = "V1")]
            v1: Vec<usize>,
            #[serde(rename = "V2")]
            v2: Vec<usize>,
            witness: Vec<usize>,
        }
        let one_based = |v: Vec<usize>| v.into_iter().map(|x| x + 1).collect();
        let (v1, v2) = self.bipartition().unwrap_or_default();
        serde_json::to_string(&Doc {
            balanced: self.balanced,
            v1: one_based(v1),
            v2: one_based(v2),
            witness: one_based(self.witness.clone().unwrap_or_default()),
        })
        .expect("report serializes")
    }
}

/// Decides balance by switching along a BFS spanning tree.
///
/// The tree is switched all-positive; the graph is balanced iff every non-tree
/// edge is then positive. Otherwise the witness is the fundamental cycle of the
/// first negative non-tree edge met in BFS order.
pub fn is_balanced(g: &SignedGraph) -> BalanceReport {
    let n = g.order();
    let mut zeta: Vec<Option<Sign>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    zeta[0] = Some(Sign::Plus);
    let mut queue = VecDeque::from([0]);
    let mut conflict = None;
    while let Some(x) = queue.pop_front() {
        let zx = zeta[x].unwrap();
        for &(y, s) in g.neighbors(x) {
            match zeta[y] {
                None => {
                    zeta[y] = Some(zx * s);
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
                Some(zy) => {
                    if conflict.is_none() && parent[y] != x && parent[x] != y && zx * s * zy == Sign::Minus {
                        conflict = Some((x, y));
                    }
                }
            }
        }
    }

    match conflict {
        None => BalanceReport {
            balanced: true,
            zeta: Some(zeta.into_iter().map(Option::unwrap).collect()),
            witness: None,
        },
        Some((u, v)) => BalanceReport {
            balanced: false,
            zeta: None,
            witness: Some(tree_cycle(&parent, &depth, u, v)),
        },
    }
}

// Tree path u .. lca .. v; closing edge {v, u} is implicit.
fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, v: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// `−Σ` is balanced.
pub fn is_antibalanced(g: &SignedGraph) -> bool {
    is_balanced(&g.negate()).balanced
}

/// Balance of `K^{D^max}(Σ)` or `K^{D^min}(Σ)`.
pub fn balance_via_associated_complete(g: &SignedGraph, which: Extremal) -> bool {
    is_balanced(&associated_complete(g, which)).balanced
}

/// `D^max = D^min` and `K^{D^±}(Σ)` is balanced.
pub fn balance_via_pm_complete(g: &SignedGraph) -> bool {
    is_compatible(g) && balance_via_associated_complete(g, Extremal::Max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceMode {
    CospectralMax,
    CospectralMin,
    LargestMax,
    LargestMin,
}

impl DistanceMode {
    pub const ALL: [DistanceMode; 4] = [
        DistanceMode::CospectralMax,
        DistanceMode::CospectralMin,
        DistanceMode::LargestMax,
        DistanceMode::LargestMin,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjacencyMode {
    Cospectral,
    Largest,
}

fn spectrum(m: &SymMatrix) -> Spectrum {
    eig_sym(m, DEFAULT_TOL).expect("Jacobi converges on integer symmetric matrices")
}

fn spectral_match(signed: &Spectrum, unsigned: &Spectrum, full: bool) -> bool {
    if full {
        signed.approx_eq(unsigned, SPECTRAL_TOL)
    } else {
        match (signed.largest(), unsigned.largest()) {
            (Some(a), Some(b)) => (a - b).abs() <= SPECTRAL_TOL,
            _ => true,
        }
    }
}

/// Spectra of the signed distance matrices and of `D(G)`, computed once.
#[derive(Clone, Debug)]
pub struct DistanceSpectra {
    pub d_max: Spectrum,
    pub d_min: Spectrum,
    pub unsigned: Spectrum,
}

impl DistanceSpectra {
    pub fn new(g: &SignedGraph) -> Self {
        let (dmax, dmin) = d_max_min_matrices(g);
        DistanceSpectra {
            d_max: spectrum(&dmax),
            d_min: spectrum(&dmin),
            unsigned: spectrum(&unsigned_distance_matrix(g)),
        }
    }

    pub fn predicate(&self, mode: DistanceMode) -> bool {
        match mode {
            DistanceMode::CospectralMax => spectral_match(&self.d_max, &self.unsigned, true),
            DistanceMode::CospectralMin => spectral_match(&self.d_min, &self.unsigned, true),
            DistanceMode::LargestMax => spectral_match(&self.d_max, &self.unsigned, false),
            DistanceMode::LargestMin => spectral_match(&self.d_min, &self.unsigned, false),
        }
    }
}

/// Balance read off the spectrum of `D^max` or `D^min` against `D(G)`.
pub fn balance_spectral_distance(g: &SignedGraph, mode: DistanceMode) -> bool {
    DistanceSpectra::new(g).predicate(mode)
}

/// Balance read off the adjacency spectrum of `Σ` against that of `G`.
pub fn balance_spectral_adjacency(g: &SignedGraph, mode: AdjacencyMode) -> bool {
    let signed = spectrum(&adjacency_matrix(g));
    let unsigned = spectrum(&adjacency_matrix(&g.underlying()));
    spectral_match(&signed, &unsigned, mode == AdjacencyMode::Cospectral)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Class {
    I,
    II,
    III,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassLabel {
    pub label: Class,
    pub balanced: bool,
    pub antibalanced: bool,
    pub geodetic: bool,
    pub compatible: bool,
}

/// Class I: balanced, antibalanced or geodetic. Class II: none of these but
/// still `D^max = D^min`. Class III: `D^max ≠ D^min`.
pub fn classify(g: &SignedGraph) -> ClassLabel {
    let balanced = is_balanced(g).balanced;
    let antibalanced = is_antibalanced(g);
    let geodetic = is_geodetic(g);
    let compatible = is_compatible(g);
    let label = if balanced || antibalanced || geodetic {
        Class::I
    } else if compatible {
        Class::II
    } else {
        Class::III
    };
    ClassLabel {
        label,
        balanced,
        antibalanced,
        geodetic,
        compatible,
    }
}
