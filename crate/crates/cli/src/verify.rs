//! Theorem checks on a single input graph, reported as JSON.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use signed_distance::balance::{
    balance_via_associated_complete, balance_via_pm_complete, DistanceMode, DistanceSpectra,
};
use signed_distance::matrix::d_pm_matrix;
use signed_distance::spectra::{eig_sym, DEFAULT_TOL};
use signed_distance::{blocks, is_balanced, is_compatible, Extremal, Sign, SignedGraph, SwitchingFunction};

use crate::{Failure, Suite};

/// Number of random switching functions tried by the switching suite.
pub const SWITCHING_TRIALS: usize = 20;

const SPECTRUM_TOL: f64 = 1e-9;

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Gen => "gen",
        Suite::Dbal => "dbal",
        Suite::Bipartite => "bipartite",
        Suite::Blocks => "blocks",
        Suite::Switching => "switching",
    }
}

/// The report on success; on a failed check, the failure together with the report.
pub fn run(g: &SignedGraph, suite: Suite, seed: u64) -> Result<String, (Failure, Option<String>)> {
    let (predicates, pass) = match suite {
        Suite::Gen => gen(g),
        Suite::Dbal => dbal(g),
        Suite::Bipartite => bipartite(g).map_err(|f| (f, None))?,
        Suite::Blocks => block_reduction(g),
        Suite::Switching => switching(g, seed).map_err(|f| (f, None))?,
    };
    let report = json!({
        "suite": suite_name(suite),
        "predicates": predicates,
        "result": if pass { "PASS" } else { "FAIL" },
    })
    .to_string();
    if pass {
        Ok(report)
    } else {
        let msg = format!("{} suite: predicates disagree", suite_name(suite));
        Err((Failure::TheoremFailed(msg), Some(report)))
    }
}

fn all_equal(values: &[bool]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

fn gen(g: &SignedGraph) -> (Value, bool) {
    let balanced = is_balanced(g).balanced;
    let k_max = balance_via_associated_complete(g, Extremal::Max);
    let k_min = balance_via_associated_complete(g, Extremal::Min);
    let k_pm = balance_via_pm_complete(g);
    let preds = json!({
        "balanced": balanced,
        "k_max_balanced": k_max,
        "k_min_balanced": k_min,
        "compatible_and_k_pm_balanced": k_pm,
    });
    (preds, all_equal(&[balanced, k_max, k_min, k_pm]))
}

fn dbal(g: &SignedGraph) -> (Value, bool) {
    let balanced = is_balanced(g).balanced;
    let spectra = DistanceSpectra::new(g);
    let [a, b, c, d] = DistanceMode::ALL.map(|m| spectra.predicate(m));
    let preds = json!({
        "balanced": balanced,
        "d_max_cospectral": a,
        "d_min_cospectral": b,
        "d_max_same_largest": c,
        "d_min_same_largest": d,
    });
    (preds, all_equal(&[balanced, a, b, c, d]))
}

fn bipartite(g: &SignedGraph) -> Result<(Value, bool), Failure> {
    if !g.is_bipartite() {
        return Err(Failure::Precondition("bipartite suite needs a bipartite graph".into()));
    }
    let balanced = is_balanced(g).balanced;
    let compatible = is_compatible(g);
    Ok((json!({ "balanced": balanced, "compatible": compatible }), balanced == compatible))
}

fn block_reduction(g: &SignedGraph) -> (Value, bool) {
    let d = blocks(g);
    let per_block: Vec<Value> = d
        .blocks
        .iter()
        .zip(d.subgraphs(g))
        .map(|(b, sub)| {
            json!({
                "vertices": b.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "compatible": is_compatible(&sub),
            })
        })
        .collect();
    let all_blocks = per_block.iter().all(|b| b["compatible"] == true);
    let compatible = is_compatible(g);
    let preds = json!({
        "compatible": compatible,
        "all_blocks_compatible": all_blocks,
        "cutpoints": d.cutpoints.iter().map(|v| v + 1).collect::<Vec<_>>(),
        "blocks": per_block,
    });
    (preds, compatible == all_blocks)
}

fn switching(g: &SignedGraph, seed: u64) -> Result<(Value, bool), Failure> {
    let d = d_pm_matrix(g).map_err(|e| Failure::Precondition(format!("switching suite needs D^max = D^min: {e}")))?;
    let spectrum = eig_sym(&d, DEFAULT_TOL).map_err(|e| Failure::Input(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut similar = true;
    let mut worst = 0.0f64;
    for _ in 0..SWITCHING_TRIALS {
        let zeta: Vec<Sign> = (0..g.order()).map(|_| Sign::from_bool(rng.gen_bool(0.5))).collect();
        let switched = g.switch(&SwitchingFunction::new(zeta.clone()));
        match d_pm_matrix(&switched) {
            Ok(ds) => {
                similar &= ds == d.conjugate_by_signs(&zeta);
                let s = eig_sym(&ds, DEFAULT_TOL).map_err(|e| Failure::Input(e.to_string()))?;
                worst = worst.max(s.max_abs_diff(&spectrum).unwrap_or(f64::INFINITY));
            }
            Err(_) => similar = false,
        }
    }
    let cospectral = worst <= SPECTRUM_TOL;
    let preds = json!({
        "trials": SWITCHING_TRIALS,
        "seed": seed,
        "similar": similar,
        "cospectral": cospectral,
        "max_eigenvalue_deviation": worst,
    });
    Ok((preds, similar && cospectral))
}
