//! Eigenvalues of symmetric matrices, exact characteristic polynomials and
//! closed-form spectra.

use thiserror::Error;

mod closed_form;
mod eigen;
mod poly;
mod sachs;

pub use closed_form::{
    complete_bipartite_distance_spectrum, cycle_spectrum_closed_form, weighted_cos_sum,
    wheel_spectrum_closed_form,
};
pub use eigen::{eig_sym, eig_sym_f64, jacobi_eigenvalues, Spectrum, DEFAULT_TOL, GROUPING_TOL, MAX_SWEEPS};
pub use poly::real_roots;
pub use sachs::{
    elementary_subgraphs, sachs_charpoly, sachs_charpoly_matrix, sachs_charpoly_weights, CharPoly,
    ElementarySubgraph, MAX_SACHS_ORDER,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error("matrix is not symmetric at ({}, {})", .i + 1, .j + 1)]
    NotSymmetric { i: usize, j: usize },
    #[error("expected {n}x{n} entries, got {len}")]
    NotSquare { n: usize, len: usize },
    #[error("Jacobi iteration did not converge in {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("Sachs enumeration supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("edge {{{}, {}}} has zero weight", .u + 1, .v + 1)]
    ZeroWeight { u: usize, v: usize },
    #[error("bad family parameter: {0}")]
    BadFamilyParam(String),
    #[error("sin(θ/2) vanishes at θ = {0}")]
    SingularTheta(f64),
}
