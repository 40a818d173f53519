//! Closed-form spectra of signed distance matrices for specific families.

use std::f64::consts::PI;

use super::{SpectraError, Spectrum};

fn odd_at_least_three(n: usize) -> Result<(), SpectraError> {
    if n < 3 || n.is_multiple_of(2) {
        Err(SpectraError::BadFamilyParam(format!("n must be odd and >= 3, got {n}")))
    } else {
        Ok(())
    }
}

/// `Σ_{r=1}^{k} r cos(rθ)` in closed form:
/// `½ (k sin((2k+1)θ/2) / sin(θ/2) − sin²(kθ/2) / sin²(θ/2))`.
pub fn weighted_cos_sum(k: usize, theta: f64) -> Result<f64, SpectraError> {
    let h = (theta / 2.0).sin();
    // sin(θ/2) vanishes only at multiples of 2π
    let turns = theta / (2.0 * PI);
    if (turns - turns.round()).abs() < 1e-12 {
        return Err(SpectraError::SingularTheta(theta));
    }
    let k = k as f64;
    let first = k * ((2.0 * k + 1.0) * theta / 2.0).sin() / h;
    let second = (k * theta / 2.0).sin().powi(2) / (h * h);
    Ok(0.5 * (first - second))
}

/// Eigenvalues of `D^±` of the unbalanced odd cycle `C_n^-`, `n = 2k + 1`:
/// the simple value `k(−1)^k − (1 − (−1)^k)/2` and, for `j = 0..k`, the double
/// value `k(−1)^j / sin((2j+1)π/2n) − sin²((2j+1)kπ/2n) / sin²((2j+1)π/2n)`.
pub fn cycle_spectrum_closed_form(n: usize) -> Result<Spectrum, SpectraError> {
    odd_at_least_three(n)?;
    let k = (n - 1) / 2;
    let kf = k as f64;
    let parity = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut values = vec![kf * parity - (1.0 - parity) / 2.0];
    for j in 0..k {
        let a = (2 * j + 1) as f64 * PI / (2 * n) as f64;
        let sj = if j % 2 == 0 { 1.0 } else { -1.0 };
        let lambda = kf * sj / a.sin() - (kf * a).sin().powi(2) / a.sin().powi(2);
        values.push(lambda);
        values.push(lambda);
    }
    Ok(Spectrum::new(values))
}

/// Eigenvalues of `D^±` of the wheel `C_n ∨ K_1` with negative rim, `n` odd:
/// `n − 4 ± √(n² − 7n + 16)` and `−2 − 6 cos(2jπ/n)` for `j = 1..n`.
pub fn wheel_spectrum_closed_form(n: usize) -> Result<Spectrum, SpectraError> {
    odd_at_least_three(n)?;
    let nf = n as f64;
    let root = (nf * nf - 7.0 * nf + 16.0).sqrt();
    let mut values = vec![nf - 4.0 + root, nf - 4.0 - root];
    values.extend((1..n).map(|j| -2.0 - 6.0 * (2.0 * PI * j as f64 / nf).cos()));
    Ok(Spectrum::new(values))
}

/// Spectrum of `D(K_{n,n})`, shared by every balanced signature:
/// `3n − 2`, `n − 2` and `−2` with multiplicity `2n − 2`.
pub fn complete_bipartite_distance_spectrum(n: usize) -> Result<Spectrum, SpectraError> {
    if n == 0 {
        return Err(SpectraError::BadFamilyParam("n must be >= 1".into()));
    }
    let nf = n as f64;
    let mut values = vec![3.0 * nf - 2.0, nf - 2.0];
    values.extend(std::iter::repeat_n(-2.0, 2 * n - 2));
    Ok(Spectrum::new(values))
}
