//! Signed distance matrices, adjacency matrices and the associated signed
//! complete graphs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::distance::{all_sign_tables, SignReachTable};
use crate::graph::SignedGraph;
use crate::sign::Sign;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    /// `D^max ≠ D^min`; carries the first incompatible pair.
    #[error("signed graph is not distance-compatible: vertices {} and {} disagree", .u + 1, .v + 1)]
    NotCompatible { u: usize, v: usize },
    #[error("matrix is not symmetric at ({}, {})", .i + 1, .j + 1)]
    NotSymmetric { i: usize, j: usize },
    #[error("expected a square matrix, row {} has {len} entries", .row + 1)]
    NotSquare { row: usize, len: usize },
}

/// Dense symmetric integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "MatrixDoc", try_from = "MatrixDoc")]
pub struct SymMatrix {
    n: usize,
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl From<SymMatrix> for MatrixDoc {
    fn from(m: SymMatrix) -> Self {
        MatrixDoc { n: m.n, entries: m.rows() }
    }
}

impl TryFrom<MatrixDoc> for SymMatrix {
    type Error = MatrixError;

    fn try_from(doc: MatrixDoc) -> Result<Self, MatrixError> {
        if doc.entries.len() != doc.n {
            return Err(MatrixError::NotSquare { row: doc.entries.len(), len: doc.n });
        }
        SymMatrix::from_rows(doc.entries)
    }
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, entries: vec![0; n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(MatrixError::NotSquare { row, len: r.len() });
        }
        let m = SymMatrix { n, entries: rows.concat() };
        for i in 0..n {
            for j in i + 1..n {
                if m.get(i, j) != m.get(j, i) {
                    return Err(MatrixError::NotSymmetric { i, j });
                }
            }
        }
        Ok(m)
    }

    fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i + 1..n {
                let x = f(i, j);
                m.entries[i * n + j] = x;
                m.entries[j * n + i] = x;
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.entries
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&x| x as f64).collect()
    }

    pub fn map(&self, f: impl Fn(i64) -> i64) -> SymMatrix {
        SymMatrix {
            n: self.n,
            entries: self.entries.iter().map(|&x| f(x)).collect(),
        }
    }

    /// `S·M·S` for the diagonal `S = diag(ζ)`.
    pub fn conjugate_by_signs(&self, zeta: &[Sign]) -> SymMatrix {
        assert_eq!(zeta.len(), self.n);
        SymMatrix::from_fn(self.n, |i, j| zeta[i].value() * self.get(i, j) * zeta[j].value())
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// One row per line, comma separated, no trailing newline.
    pub fn to_csv(&self) -> String {
        self.rows()
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }
}

fn signed_matrix(tables: &[SignReachTable], pick: impl Fn(&SignReachTable, usize) -> Sign) -> SymMatrix {
    SymMatrix::from_fn(tables.len(), |i, j| pick(&tables[i], j).value() * tables[i].dist[j] as i64)
}

/// `D^max`: entry `σ_max(u, v)·d(u, v)`.
pub fn d_max_matrix(g: &SignedGraph) -> SymMatrix {
    signed_matrix(&all_sign_tables(g), SignReachTable::sigma_max)
}

/// `D^min`: entry `σ_min(u, v)·d(u, v)`.
pub fn d_min_matrix(g: &SignedGraph) -> SymMatrix {
    signed_matrix(&all_sign_tables(g), SignReachTable::sigma_min)
}

/// Both signed distance matrices from one set of BFS passes.
pub fn d_max_min_matrices(g: &SignedGraph) -> (SymMatrix, SymMatrix) {
    let tables = all_sign_tables(g);
    (
        signed_matrix(&tables, SignReachTable::sigma_max),
        signed_matrix(&tables, SignReachTable::sigma_min),
    )
}

/// `D^±`, the common value of `D^max` and `D^min`.
pub fn d_pm_matrix(g: &SignedGraph) -> Result<SymMatrix, MatrixError> {
    let (dmax, dmin) = d_max_min_matrices(g);
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            if dmax.get(u, v) != dmin.get(u, v) {
                return Err(MatrixError::NotCompatible { u, v });
            }
        }
    }
    Ok(dmax)
}

/// `D(G)`: unsigned hop distances.
pub fn unsigned_distance_matrix(g: &SignedGraph) -> SymMatrix {
    let tables = all_sign_tables(g);
    SymMatrix::from_fn(g.order(), |i, j| tables[i].dist[j] as i64)
}

/// Signed adjacency matrix `A(Σ)`.
pub fn adjacency_matrix(g: &SignedGraph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.order());
    let n = g.order();
    for e in g.edges() {
        m.entries[e.u * n + e.v] = e.sign.value();
        m.entries[e.v * n + e.u] = e.sign.value();
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremal {
    Max,
    Min,
}

/// `K^{D^max}(Σ)` or `K^{D^min}(Σ)`: the complete graph on `V(Σ)` keeping the
/// edges of `Σ` and signing each non-adjacent pair by `σ_max` resp. `σ_min`.
pub fn associated_complete(g: &SignedGraph, which: Extremal) -> SignedGraph {
    let tables = all_sign_tables(g);
    let n = g.order();
    let mut edges: Vec<(usize, usize, Sign)> = g.edges().iter().map(|e| (e.u, e.v, e.sign)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !g.is_adjacent(u, v) {
                let s = match which {
                    Extremal::Max => tables[u].sigma_max(v),
                    Extremal::Min => tables[u].sigma_min(v),
                };
                edges.push((u, v, s));
            }
        }
    }
    SignedGraph::new(n, edges).expect("completion of a valid graph")
}
