use std::cmp::Ordering;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::SpectraError;
use crate::matrix::SymMatrix;

/// Off-diagonal stopping tolerance, relative to the Frobenius norm.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Values closer than this are reported as one eigenvalue with multiplicity.
pub const GROUPING_TOL: f64 = 1e-6;
pub const MAX_SWEEPS: usize = 100;

/// Real spectrum of a symmetric matrix, eigenvalues in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    groups: Vec<(f64, usize)>,
}

impl Spectrum {
    pub fn new(values: Vec<f64>) -> Self {
        Self::with_grouping(values, GROUPING_TOL)
    }

    pub fn with_grouping(mut values: Vec<f64>, grouping_tol: f64) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap_or(Ordering::Equal));
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut last = f64::NAN;
        for &x in &values {
            match groups.last_mut() {
                Some((_, mult)) if (last - x).abs() <= grouping_tol => *mult += 1,
                _ => groups.push((x, 1)),
            }
            last = x;
        }
        // report each group by its mean
        let mut i = 0;
        for g in &mut groups {
            g.0 = values[i..i + g.1].iter().sum::<f64>() / g.1 as f64;
            i += g.1;
        }
        Spectrum { eigenvalues: values, groups }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// `(value, multiplicity)` pairs, descending.
    pub fn groups(&self) -> &[(f64, usize)] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn largest(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn smallest(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Multiplicities in descending order of value.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.1).collect()
    }

    /// Largest pointwise gap between the sorted eigenvalue lists, or `None` if
    /// the lengths differ.
    pub fn max_abs_diff(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.eigenvalues
                .iter()
                .zip(&other.eigenvalues)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    /// Equal as multisets within `tol`.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.max_abs_diff(other).is_some_and(|d| d <= tol)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spectrum serializes")
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let groups: Vec<(f64, usize)> = self.groups.clone();
        let mut s = serializer.serialize_struct("Spectrum", 2)?;
        s.serialize_field("eigenvalues", &self.eigenvalues)?;
        s.serialize_field("groups", &groups)?;
        s.end()
    }
}

/// Eigenvalues of an integer symmetric matrix by cyclic Jacobi rotations.
pub fn eig_sym(m: &SymMatrix, tol: f64) -> Result<Spectrum, SpectraError> {
    eig_sym_f64(m.order(), &m.to_f64(), tol)
}

/// Eigenvalues of a dense row-major `n × n` real symmetric matrix.
pub fn eig_sym_f64(n: usize, data: &[f64], tol: f64) -> Result<Spectrum, SpectraError> {
    jacobi_eigenvalues(n, data, tol).map(Spectrum::new)
}

pub fn jacobi_eigenvalues(n: usize, data: &[f64], tol: f64) -> Result<Vec<f64>, SpectraError> {
    if data.len() != n * n {
        return Err(SpectraError::NotSquare { n, len: data.len() });
    }
    for i in 0..n {
        for j in i + 1..n {
            if data[i * n + j] != data[j * n + i] {
                return Err(SpectraError::NotSymmetric { i, j });
            }
        }
    }
    let mut a = data.to_vec();
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = tol * norm.max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(n, &a);
        if off <= threshold {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(n, &mut a, p, q);
            }
        }
    }
    if off_diagonal_norm(n, &a) <= threshold {
        return Ok((0..n).map(|i| a[i * n + i]).collect());
    }
    Err(SpectraError::NoConvergence { sweeps: MAX_SWEEPS })
}

fn off_diagonal_norm(n: usize, a: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

// Annihilates a[p][q] with a plane rotation applied on both sides.
fn rotate(n: usize, a: &mut [f64], p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + theta.hypot(1.0))
    };
    if t == 0.0 {
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        return;
    }
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;
    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = c * akp - s * akq;
        a[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = c * apk - s * aqk;
        a[q * n + k] = s * apk + c * aqk;
    }
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn negative_triangle() {
        // λ³ − 3λ + 2 = (λ − 1)²(λ + 2)
        let m = SymMatrix::from_rows(vec![vec![0, 1, -1], vec![1, 0, 1], vec![-1, 1, 0]]).unwrap();
        let s = eig_sym(&m, DEFAULT_TOL).unwrap();
        assert!(close(s.eigenvalues(), &[1.0, 1.0, -2.0], 1e-12));
        assert_eq!(s.multiplicities(), vec![2, 1]);
    }

    #[test]
    fn complete_graph_k4() {
        let rows = (0..4).map(|i| (0..4).map(|j| i64::from(i != j)).collect()).collect();
        let s = eig_sym(&SymMatrix::from_rows(rows).unwrap(), DEFAULT_TOL).unwrap();
        assert!(close(s.eigenvalues(), &[3.0, -1.0, -1.0, -1.0], 1e-12));
        assert_eq!(s.groups().len(), 2);
        assert!((s.groups()[1].0 + 1.0).abs() < 1e-12);
    }

    #[test]
    fn distance_matrix_of_c4() {
        // D(K_{2,2}): 3n−2, n−2, −2 (×2n−2) at n = 2
        let m = SymMatrix::from_rows(vec![
            vec![0, 1, 2, 1],
            vec![1, 0, 1, 2],
            vec![2, 1, 0, 1],
            vec![1, 2, 1, 0],
        ])
        .unwrap();
        let s = eig_sym(&m, DEFAULT_TOL).unwrap();
        assert!(close(s.eigenvalues(), &[4.0, 0.0, -2.0, -2.0], 1e-12));
        assert!(s.sum().abs() < 1e-12);
    }

    #[test]
    fn errors() {
        assert_eq!(
            eig_sym_f64(2, &[0.0, 1.0, 2.0, 0.0], DEFAULT_TOL),
            Err(SpectraError::NotSymmetric { i: 0, j: 1 })
        );
        assert_eq!(
            eig_sym_f64(2, &[0.0, 1.0, 1.0], DEFAULT_TOL),
            Err(SpectraError::NotSquare { n: 2, len: 3 })
        );
    }

    #[test]
    fn empty_and_zero() {
        assert!(eig_sym_f64(0, &[], DEFAULT_TOL).unwrap().is_empty());
        let s = eig_sym_f64(3, &[0.0; 9], DEFAULT_TOL).unwrap();
        assert_eq!(s.groups(), &[(0.0, 3)]);
    }

    #[test]
    fn spectrum_json_shape() {
        let s = Spectrum::new(vec![-2.0, 1.0, 1.0]);
        assert_eq!(s.to_json(), r#"{"eigenvalues":[1.0,1.0,-2.0],"groups":[[1.0,2],[-2.0,1]]}"#);
    }

    #[test]
    fn approx_eq_requires_same_length() {
        let a = Spectrum::new(vec![1.0, 2.0]);
        let b = Spectrum::new(vec![2.0, 1.0 + 1e-9]);
        assert!(a.approx_eq(&b, 1e-8));
        assert!(!a.approx_eq(&b, 1e-10));
        assert!(!a.approx_eq(&Spectrum::new(vec![1.0]), 1.0));
    }
}
