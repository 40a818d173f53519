//! Exact characteristic polynomials by the weighted Sachs formula.
//!
//! `φ(λ) = Σ_k a_k λ^{n−k}` with
//! `a_k = Σ_B (−1)^{κ(B)} 2^{c(B)} w(B) w(B₂)` over the elementary subgraphs
//! `B` on `k` vertices, where `κ` counts components, `c` counts cycles and
//! `B₂` is the set of isolated edges. Each isolated edge therefore contributes
//! `w(e)²` and each cycle the product of its edge weights.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{poly, SpectraError, Spectrum};
use crate::graph::{Edge, SignedGraph};
use crate::matrix::SymMatrix;

pub const MAX_SACHS_ORDER: usize = 12;

/// Monic characteristic polynomial with exact integer coefficients,
/// highest degree first: `coeffs[k]` multiplies `λ^{n−k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Real roots with exact multiplicities, as a spectrum.
    pub fn roots(&self) -> Spectrum {
        let values = poly::real_roots(&self.coeffs)
            .into_iter()
            .flat_map(|(r, m)| std::iter::repeat_n(r, m))
            .collect();
        Spectrum::new(values)
    }

    /// Real roots as `(value, multiplicity)`, ascending.
    pub fn roots_with_multiplicity(&self) -> Vec<(f64, usize)> {
        poly::real_roots(&self.coeffs)
    }

    pub fn to_json(&self) -> String {
        let list: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        format!("{{\"coeffs\":[{}]}}", list.join(","))
    }
}

/// One elementary subgraph: vertex-disjoint isolated edges and cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementarySubgraph {
    pub isolated_edges: Vec<(usize, usize)>,
    /// Each cycle as a vertex sequence starting at its smallest vertex.
    pub cycles: Vec<Vec<usize>>,
}

impl ElementarySubgraph {
    pub fn order(&self) -> usize {
        2 * self.isolated_edges.len() + self.cycles.iter().map(Vec::len).sum::<usize>()
    }

    /// `κ(B)`.
    pub fn components(&self) -> usize {
        self.isolated_edges.len() + self.cycles.len()
    }

    /// `c(B)`.
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }
}

struct Enumerator<'a> {
    n: usize,
    w: &'a [Vec<BigInt>],
    // sorted neighbor lists of the nonzero pattern
    nbrs: Vec<Vec<usize>>,
}

impl Enumerator<'_> {
    /// Calls `visit` for every elementary subgraph. `decided` holds vertices that
    /// are covered or deliberately left out; every undecided vertex is larger
    /// than all decided ones.
    fn run(&self, visit: &mut dyn FnMut(&ElementarySubgraph)) {
        let mut b = ElementarySubgraph {
            isolated_edges: Vec::new(),
            cycles: Vec::new(),
        };
        self.step(0, 0, &mut b, visit);
    }

    fn step(&self, decided: u32, from: usize, b: &mut ElementarySubgraph, visit: &mut dyn FnMut(&ElementarySubgraph)) {
        let Some(v) = (from..self.n).find(|&v| decided & (1 << v) == 0) else {
            visit(b);
            return;
        };
        let with_v = decided | (1 << v);

        self.step(with_v, v + 1, b, visit);

        for &x in &self.nbrs[v] {
            if x > v && with_v & (1 << x) == 0 {
                b.isolated_edges.push((v, x));
                self.step(with_v | (1 << x), v + 1, b, visit);
                b.isolated_edges.pop();
            }
        }

        let mut path = vec![v];
        self.extend_cycle(with_v, &mut path, b, visit);
    }

    // Grows a path from its smallest vertex `path[0]` through undecided vertices.
    fn extend_cycle(
        &self,
        decided: u32,
        path: &mut Vec<usize>,
        b: &mut ElementarySubgraph,
        visit: &mut dyn FnMut(&ElementarySubgraph),
    ) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() >= 3 && path[1] < last && !self.w[last][start].is_zero() {
            b.cycles.push(path.clone());
            self.step(decided, start + 1, b, visit);
            b.cycles.pop();
        }
        for &x in &self.nbrs[last] {
            if x > start && decided & (1 << x) == 0 {
                path.push(x);
                self.extend_cycle(decided | (1 << x), path, b, visit);
                path.pop();
            }
        }
    }

    fn term(&self, b: &ElementarySubgraph) -> BigInt {
        let mut t = BigInt::one();
        for &(u, v) in &b.isolated_edges {
            t *= &self.w[u][v] * &self.w[u][v];
        }
        for c in &b.cycles {
            for i in 0..c.len() {
                t *= &self.w[c[i]][c[(i + 1) % c.len()]];
            }
            t *= 2;
        }
        if b.components() % 2 == 1 {
            -t
        } else {
            t
        }
    }
}

/// Characteristic polynomial of the weighted adjacency matrix `w`
/// (row-major, symmetric, zero diagonal; zero means no edge).
pub fn sachs_charpoly_weights(w: &[Vec<BigInt>]) -> Result<CharPoly, SpectraError> {
    let n = w.len();
    if n > MAX_SACHS_ORDER {
        return Err(SpectraError::TooLarge { n, max: MAX_SACHS_ORDER });
    }
    for i in 0..n {
        if w[i].len() != n {
            return Err(SpectraError::NotSquare { n, len: w[i].len() });
        }
        for j in 0..n {
            if w[i][j] != w[j][i] {
                return Err(SpectraError::NotSymmetric { i, j });
            }
        }
    }
    let nbrs = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && !w[i][j].is_zero()).collect())
        .collect();
    let e = Enumerator { n, w, nbrs };
    let mut coeffs = vec![BigInt::zero(); n + 1];
    e.run(&mut |b| {
        let t = e.term(b);
        coeffs[b.order()] += t;
    });
    Ok(CharPoly { coeffs })
}

/// Sachs polynomial of `g` with integer edge weights `weight(e)`.
/// Signed adjacency uses `weight = σ`.
pub fn sachs_charpoly(g: &SignedGraph, weight: impl Fn(&Edge) -> i64) -> Result<CharPoly, SpectraError> {
    let n = g.order();
    if n > MAX_SACHS_ORDER {
        return Err(SpectraError::TooLarge { n, max: MAX_SACHS_ORDER });
    }
    let mut w = vec![vec![BigInt::zero(); n]; n];
    for e in g.edges() {
        let x = weight(e);
        if x == 0 {
            return Err(SpectraError::ZeroWeight { u: e.u, v: e.v });
        }
        w[e.u][e.v] = BigInt::from(x);
        w[e.v][e.u] = BigInt::from(x);
    }
    sachs_charpoly_weights(&w)
}

/// Sachs polynomial of the weighted complete-or-not graph whose adjacency
/// matrix is `m`, e.g. a signed distance matrix.
pub fn sachs_charpoly_matrix(m: &SymMatrix) -> Result<CharPoly, SpectraError> {
    let n = m.order();
    if n > MAX_SACHS_ORDER {
        return Err(SpectraError::TooLarge { n, max: MAX_SACHS_ORDER });
    }
    let w: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::zero() } else { BigInt::from(m.get(i, j)) }).collect())
        .collect();
    sachs_charpoly_weights(&w)
}

/// All elementary subgraphs of `g`, in enumeration order.
pub fn elementary_subgraphs(g: &SignedGraph) -> Result<Vec<ElementarySubgraph>, SpectraError> {
    let n = g.order();
    if n > MAX_SACHS_ORDER {
        return Err(SpectraError::TooLarge { n, max: MAX_SACHS_ORDER });
    }
    let mut w = vec![vec![BigInt::zero(); n]; n];
    for e in g.edges() {
        w[e.u][e.v] = BigInt::one();
        w[e.v][e.u] = BigInt::one();
    }
    let nbrs = (0..n).map(|v| g.neighbors(v).iter().map(|&(x, _)| x).collect()).collect();
    let e = Enumerator { n, w: &w, nbrs };
    let mut out = Vec::new();
    e.run(&mut |b| out.push(b.clone()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, unbalanced_cycle};
    use crate::sign::Sign;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn by_sign(g: &SignedGraph) -> CharPoly {
        sachs_charpoly(g, |e| e.sign.value()).unwrap()
    }

    #[test]
    fn negative_triangle() {
        assert_eq!(by_sign(&unbalanced_cycle(3).unwrap()).coeffs, ints(&[1, 0, -3, 2]));
    }

    #[test]
    fn positive_triangle() {
        assert_eq!(by_sign(&complete(3).unwrap()).coeffs, ints(&[1, 0, -3, -2]));
    }

    #[test]
    fn k4() {
        // (λ − 3)(λ + 1)³
        assert_eq!(by_sign(&complete(4).unwrap()).coeffs, ints(&[1, 0, -6, -8, -3]));
    }

    #[test]
    fn c4_signs() {
        // positive C4: λ⁴ − 4λ²; negative C4: λ⁴ − 4λ² + 4
        assert_eq!(by_sign(&cycle(4, Sign::Plus).unwrap()).coeffs, ints(&[1, 0, -4, 0, 0]));
        let neg = crate::io::parse("4 4\n1 2 +\n2 3 +\n3 4 +\n4 1 -").unwrap();
        assert_eq!(by_sign(&neg).coeffs, ints(&[1, 0, -4, 0, 4]));
    }

    #[test]
    fn order_two_coefficient_is_minus_sum_of_squares() {
        let g = complete(5).unwrap();
        let p = sachs_charpoly(&g, |e| (e.u + e.v) as i64 + 1).unwrap();
        let expected: i64 = g.edges().iter().map(|e| ((e.u + e.v) as i64 + 1).pow(2)).sum();
        assert_eq!(p.coeffs[1], BigInt::zero());
        assert_eq!(p.coeffs[2], BigInt::from(-expected));
    }

    #[test]
    fn elementary_subgraph_counts() {
        // K4: empty, 6 edges, 3 perfect matchings, 4 triangles, 3 four-cycles
        let subs = elementary_subgraphs(&complete(4).unwrap()).unwrap();
        let count = |k: usize| subs.iter().filter(|b| b.order() == k).count();
        assert_eq!((count(0), count(2), count(3), count(4)), (1, 6, 4, 6));
        for b in &subs {
            assert_eq!(b.components(), b.isolated_edges.len() + b.cycles.len());
        }
    }

    #[test]
    fn too_large_and_zero_weight() {
        let g = complete(13).unwrap();
        assert_eq!(
            sachs_charpoly(&g, |e| e.sign.value()),
            Err(SpectraError::TooLarge { n: 13, max: 12 })
        );
        let k3 = complete(3).unwrap();
        assert!(matches!(sachs_charpoly(&k3, |_| 0), Err(SpectraError::ZeroWeight { .. })));
    }

    #[test]
    fn json() {
        let p = by_sign(&unbalanced_cycle(3).unwrap());
        assert_eq!(p.to_json(), r#"{"coeffs":[1,0,-3,2]}"#);
    }

    #[test]
    fn roots_of_negative_triangle() {
        let r = by_sign(&unbalanced_cycle(3).unwrap()).roots();
        assert_eq!(r.multiplicities(), vec![2, 1]);
        assert!((r.largest().unwrap() - 1.0).abs() < 1e-12);
    }
}
