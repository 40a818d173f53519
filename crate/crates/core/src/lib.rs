//! Signed distance matrices of signed graphs.
//!
//! For a connected signed graph `Σ = (G, σ)` the crate computes the two signed
//! distance matrices `D^max` and `D^min` (hop distance signed by the best resp.
//! worst sign over all shortest paths), decides balance, antibalance,
//! geodeticity and distance-compatibility, and provides the spectral tools used
//! to check spectral characterizations of balance: a Jacobi eigensolver, exact
//! Sachs characteristic polynomials and closed-form spectra for odd unbalanced
//! cycles, negative-rim wheels and `K_{n,n}`.
//!
//! Vertices are `0..n` in the API; the edge-list format and every serialized
//! output use `1..=n`.
//!
//! ```
//! use signed_distance::{io, matrix};
//!
//! let g = io::parse("3 3\n1 2 +\n2 3 +\n3 1 -").unwrap();
//! let d = matrix::d_pm_matrix(&g).unwrap();
//! assert_eq!(d.to_csv(), "0,1,-1\n1,0,1\n-1,1,0");
//! ```

pub mod balance;
pub mod blocks;
pub mod distance;
pub mod families;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod sign;
pub mod spectra;

pub use balance::{classify, is_antibalanced, is_balanced, BalanceReport, Class, ClassLabel};
pub use blocks::{blocks, BlockDecomposition};
pub use distance::{is_compatible, is_geodetic, pair_distance, sign_bfs, PairDistance, SignReachTable};
pub use families::{gen_family, Family};
pub use graph::{Edge, GraphError, SignedGraph, SwitchingFunction};
pub use matrix::{SymMatrix, Extremal};
pub use sign::Sign;
pub use spectra::{eig_sym, CharPoly, Spectrum};
