//! Von Neumann and Shannon entropies, in nats.

use super::state::{DensityMatrix, DENSITY_TOLERANCE};

/// Clips floating-point drift below zero (down to the density tolerance)
/// and above one.
pub(crate) fn clip_probability(p: f64) -> f64 {
    if (-DENSITY_TOLERANCE..0.0).contains(&p) {
        0.0
    } else {
        p.min(1.0)
    }
}

/// `-p ln p` with the convention `0 ln 0 = 0`.
fn plogp(p: f64) -> f64 {
    if p > 0.0 {
        -p * p.ln()
    } else {
        0.0
    }
}

/// Shannon entropy of a probability vector (nats). Entries are clipped
/// per [`clip_probability`]; no renormalization is performed.
pub fn shannon_entropy(probabilities: &[f64]) -> f64 {
    probabilities
        .iter()
        .map(|&p| plogp(clip_probability(p)))
        .sum::<f64>()
        .max(0.0)
}

/// S(ρ) = −Tr ρ ln ρ.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    shannon_entropy(&rho.eigenvalues())
}

/// Entropy of a qubit state with Bloch-vector length `r`, i.e. the binary
/// entropy of `(1 + r) / 2`.
pub fn entropy_from_bloch_norm(r: f64) -> f64 {
    let r = r.clamp(0.0, 1.0);
    shannon_entropy(&[0.5 * (1.0 + r), 0.5 * (1.0 - r)])
}

#[cfg(test)]
mod tests {
    use std::f64::consts::LN_2;

    use super::*;
    use crate::quantum::{bloch_to_density, BlochVector};

    #[test]
    fn pure_states_have_zero_entropy() {
        for v in [
            BlochVector::NORTH,
            BlochVector::new(0.6, 0.0, 0.8).unwrap(),
            BlochVector::new(-0.0, -1.0, 0.0).unwrap(),
        ] {
            assert!(von_neumann_entropy(&bloch_to_density(&v)) < 1e-14);
        }
    }

    #[test]
    fn maximally_mixed_has_log_two() {
        let s = von_neumann_entropy(&DensityMatrix::maximally_mixed());
        assert!((s - LN_2).abs() < 1e-15);
    }

    #[test]
    fn binary_entropy_point() {
        // h(0.9) = −0.9 ln 0.9 − 0.1 ln 0.1
        let oracle = -(0.9f64 * 0.9f64.ln()) - 0.1 * 0.1f64.ln();
        let rho = bloch_to_density(&BlochVector::new(0.0, 0.0, 0.8).unwrap());
        let s = von_neumann_entropy(&rho);
        assert!((s - oracle).abs() < 1e-15);
        assert!((s - 0.325083).abs() < 1e-6);
    }

    #[test]
    fn negative_drift_is_clipped() {
        assert_eq!(shannon_entropy(&[1.0, -1e-13]), 0.0);
        assert_eq!(clip_probability(1.0 + 1e-15), 1.0);
    }
}
