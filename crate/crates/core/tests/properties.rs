mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use signed_distance::balance::{
    balance_spectral_adjacency, balance_via_associated_complete, balance_via_pm_complete, AdjacencyMode,
    DistanceMode, DistanceSpectra,
};
use signed_distance::distance::{compatible_pair, is_geodetic, pair_distance};
use signed_distance::families::{neg_rim_wheel, unbalanced_cycle};
use signed_distance::matrix::{
    adjacency_matrix, associated_complete, d_max_min_matrices, d_pm_matrix, unsigned_distance_matrix,
};
use signed_distance::spectra::{
    cycle_spectrum_closed_form, eig_sym, sachs_charpoly, wheel_spectrum_closed_form, DEFAULT_TOL,
};
use signed_distance::{
    blocks, io, is_antibalanced, is_balanced, is_compatible, Extremal, Sign, SignedGraph, SwitchingFunction,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), any::<u64>(), any::<u64>()))
        .prop_filter_map("connected", |(n, edges, signs)| {
            let pairs = n * (n - 1) / 2;
            graph_from_masks(n, edges & ((1u64 << pairs) - 1), signs)
        })
}

fn arb_switched(max_n: usize) -> impl Strategy<Value = (SignedGraph, SwitchingFunction)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), prop::collection::vec(any::<bool>(), n))
            .prop_map(|(g, z)| (g, SwitchingFunction::new(z.into_iter().map(Sign::from_bool).collect())))
    })
}

fn arb_bipartite(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (2..=max_n, any::<u64>(), any::<u64>(), any::<u64>()).prop_filter_map("connected bipartite", |(n, side, e, s)| {
        let mut edges = Vec::new();
        let mut bit = 0;
        for v in 1..n {
            for u in 0..v {
                if (side >> u) & 1 != (side >> v) & 1 && e & (1 << bit) != 0 {
                    let sign = Sign::from_bool(s & (1 << edges.len()) == 0);
                    edges.push((u, v, sign));
                }
                bit += 1;
            }
        }
        SignedGraph::new(n, edges).ok()
    })
}

fn arb_compatible(max_n: usize) -> impl Strategy<Value = (SignedGraph, SwitchingFunction)> {
    arb_switched(max_n).prop_filter("compatible", |(g, _)| is_compatible(g))
}

/// Some cycle of `g`, rooted at its least vertex, if `g` has one.
fn some_cycle(g: &SignedGraph) -> Option<Vec<usize>> {
    let n = g.order();
    for start in 0..n {
        let mut stack = vec![(start, vec![start])];
        while let Some((x, path)) = stack.pop() {
            for &(y, _) in g.neighbors(x) {
                if y == start && path.len() >= 3 {
                    return Some(path.clone());
                }
                if !path.contains(&y) && y > start {
                    let mut p = path.clone();
                    p.push(y);
                    stack.push((y, p));
                }
            }
        }
    }
    None
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn switching_is_an_involution((g, z) in arb_switched(8)) {
        prop_assert_eq!(g.switch(&z).switch(&z), g);
    }

    #[test]
    fn switching_preserves_cycle_signs((g, z) in arb_switched(8)) {
        if let Some(c) = some_cycle(&g) {
            prop_assert_eq!(g.switch(&z).cycle_sign(&c), g.cycle_sign(&c));
        }
        prop_assert_eq!(is_balanced(&g.switch(&z)).balanced, is_balanced(&g).balanced);
    }

    #[test]
    fn round_trip(g in arb_graph(9)) {
        prop_assert_eq!(io::parse(&io::emit(&g)).unwrap(), g);
    }

    #[test]
    fn pair_distance_is_symmetric(g in arb_graph(8)) {
        for u in 0..g.order() {
            for v in 0..g.order() {
                let a = pair_distance(&g, u, v).unwrap();
                let b = pair_distance(&g, v, u).unwrap();
                prop_assert_eq!((a.d, a.sigma_max, a.sigma_min), (b.d, b.sigma_max, b.sigma_min));
            }
        }
    }

    #[test]
    fn compatibility_is_switching_and_negation_invariant((g, z) in arb_switched(8)) {
        let s = g.switch(&z);
        let neg = g.negate();
        for u in 0..g.order() {
            for v in 0..g.order() {
                let c = compatible_pair(&g, u, v).unwrap();
                prop_assert_eq!(compatible_pair(&s, u, v).unwrap(), c);
                prop_assert_eq!(compatible_pair(&neg, u, v).unwrap(), c);
            }
        }
    }

    #[test]
    fn class_one_is_compatible(g in arb_graph(8)) {
        if is_balanced(&g).balanced || is_antibalanced(&g) || is_geodetic(&g) {
            prop_assert!(is_compatible(&g));
        }
    }

    #[test]
    fn compatibility_reduces_to_blocks(g in arb_graph(8)) {
        let per_block = blocks(&g).subgraphs(&g).iter().all(is_compatible);
        prop_assert_eq!(is_compatible(&g), per_block);
    }

    #[test]
    fn bipartite_compatible_iff_balanced(g in arb_bipartite(8)) {
        let balanced = is_balanced(&g).balanced;
        prop_assert_eq!(is_compatible(&g), balanced);
        let (dmax, dmin) = d_max_min_matrices(&g);
        prop_assert_eq!(dmax == dmin, balanced);
    }

    #[test]
    fn distance_matrix_relations(g in arb_graph(8)) {
        let (dmax, dmin) = d_max_min_matrices(&g);
        let d = unsigned_distance_matrix(&g);
        let n = g.order();
        for i in 0..n {
            prop_assert_eq!(dmax.get(i, i), 0);
            for j in 0..n {
                prop_assert!(dmax.get(i, j) >= dmin.get(i, j));
                prop_assert_eq!(dmax.get(i, j).abs(), d.get(i, j));
                prop_assert_eq!(dmin.get(i, j).abs(), d.get(i, j));
            }
        }
        prop_assert_eq!(dmax == dmin, is_compatible(&g));
        prop_assert_eq!(d_pm_matrix(&g).is_ok(), is_compatible(&g));
    }

    #[test]
    fn associated_complete_matches_matrix_signs(g in arb_graph(8)) {
        let (dmax, dmin) = d_max_min_matrices(&g);
        for (which, d) in [(Extremal::Max, &dmax), (Extremal::Min, &dmin)] {
            let a = adjacency_matrix(&associated_complete(&g, which));
            prop_assert_eq!(a, d.map(i64::signum));
        }
    }

    #[test]
    fn switching_similarity((g, z) in arb_compatible(8)) {
        let d = d_pm_matrix(&g).unwrap();
        let ds = d_pm_matrix(&g.switch(&z)).unwrap();
        prop_assert_eq!(&ds, &d.conjugate_by_signs(z.as_slice()));
        let a = eig_sym(&d, DEFAULT_TOL).unwrap();
        let b = eig_sym(&ds, DEFAULT_TOL).unwrap();
        prop_assert!(a.approx_eq(&b, 1e-9));
    }

    #[test]
    fn adjacency_spectrum_is_switching_invariant((g, z) in arb_switched(8)) {
        let a = eig_sym(&adjacency_matrix(&g), DEFAULT_TOL).unwrap();
        let b = eig_sym(&adjacency_matrix(&g.switch(&z)), DEFAULT_TOL).unwrap();
        prop_assert!(a.approx_eq(&b, 1e-9));
    }

    #[test]
    fn balance_four_ways(g in arb_graph(8)) {
        let b = is_balanced(&g).balanced;
        prop_assert_eq!(balance_via_associated_complete(&g, Extremal::Max), b);
        prop_assert_eq!(balance_via_associated_complete(&g, Extremal::Min), b);
        prop_assert_eq!(balance_via_pm_complete(&g), b);
    }

    #[test]
    fn balance_spectral_distance_five_ways(g in arb_graph(7)) {
        let b = is_balanced(&g).balanced;
        let spectra = DistanceSpectra::new(&g);
        for mode in DistanceMode::ALL {
            prop_assert_eq!(spectra.predicate(mode), b, "{:?}", mode);
        }
    }

    #[test]
    fn balance_spectral_adjacency_agrees(g in arb_graph(8)) {
        let b = is_balanced(&g).balanced;
        prop_assert_eq!(balance_spectral_adjacency(&g, AdjacencyMode::Cospectral), b);
        prop_assert_eq!(balance_spectral_adjacency(&g, AdjacencyMode::Largest), b);
    }

    #[test]
    fn harary_bipartition_and_witness(g in arb_graph(8)) {
        let r = is_balanced(&g);
        match r.bipartition() {
            Some((v1, v2)) => {
                prop_assert!(r.balanced);
                prop_assert_eq!(v1.len() + v2.len(), g.order());
                for e in g.edges() {
                    prop_assert_eq!(v1.contains(&e.u) == v1.contains(&e.v), e.sign == Sign::Plus);
                }
            }
            None => {
                prop_assert!(!r.balanced);
                let w = r.witness.unwrap();
                prop_assert_eq!(g.cycle_sign(&w), Some(Sign::Minus));
            }
        }
    }

    #[test]
    fn balanced_associated_complete_spectrum(g in arb_graph(8)) {
        prop_assume!(is_balanced(&g).balanced);
        let n = g.order() as f64;
        let k = associated_complete(&g, Extremal::Max);
        let s = eig_sym(&adjacency_matrix(&k), DEFAULT_TOL).unwrap();
        prop_assert!((s.eigenvalues()[0] - (n - 1.0)).abs() < 1e-6);
        prop_assert!(s.eigenvalues()[1..].iter().all(|x| (x + 1.0).abs() < 1e-6));
    }

    #[test]
    fn weighted_complete_largest_eigenvalue(g in arb_graph(7)) {
        // distance-weighted complete graph, signed by the associated complete graph
        let signs = adjacency_matrix(&associated_complete(&g, Extremal::Max));
        let d = unsigned_distance_matrix(&g);
        let n = g.order();
        let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| signs.get(i, j) * d.get(i, j)).collect()).collect();
        let w = signed_distance::SymMatrix::from_rows(rows).unwrap();
        let top = eig_sym(&w, DEFAULT_TOL).unwrap().largest().unwrap();
        let top_unsigned = eig_sym(&d, DEFAULT_TOL).unwrap().largest().unwrap();
        prop_assert_eq!((top - top_unsigned).abs() < 1e-6, is_balanced(&g).balanced);
    }

    #[test]
    fn sachs_second_coefficient(g in arb_graph(8)) {
        let p = sachs_charpoly(&g, |e| e.sign.value()).unwrap();
        prop_assert_eq!(&p.coeffs[1], &BigInt::from(0));
        prop_assert_eq!(&p.coeffs[2], &BigInt::from(-(g.size() as i64)));
        let q = sachs_charpoly(&g, |e| 2 * e.sign.value()).unwrap();
        prop_assert_eq!(&q.coeffs[2], &BigInt::from(-4 * g.size() as i64));
    }

    #[test]
    fn distance_spectra_have_zero_trace(g in arb_graph(9)) {
        let (dmax, dmin) = d_max_min_matrices(&g);
        for m in [dmax, dmin, unsigned_distance_matrix(&g)] {
            let s = eig_sym(&m, DEFAULT_TOL).unwrap();
            prop_assert!(s.sum().abs() < 1e-8 * (1.0 + s.largest().unwrap().abs()));
        }
    }
}

#[test]
fn closed_forms_match_numeric_spectra() {
    for n in (3..=25).step_by(2) {
        let c = eig_sym(&d_pm_matrix(&unbalanced_cycle(n).unwrap()).unwrap(), DEFAULT_TOL).unwrap();
        assert!(c.approx_eq(&cycle_spectrum_closed_form(n).unwrap(), 1e-8), "cycle {n}");
        let w = eig_sym(&d_pm_matrix(&neg_rim_wheel(n).unwrap()).unwrap(), DEFAULT_TOL).unwrap();
        assert!(w.approx_eq(&wheel_spectrum_closed_form(n).unwrap(), 1e-8), "wheel {n}");
    }
}
