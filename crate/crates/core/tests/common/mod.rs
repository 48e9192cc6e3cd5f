//! Oracles shared by the integration tests. None of this goes through the
//! library's own eigen or entropy code.
#![allow(dead_code)]

use ecd_core::quantum::DensityMatrix;
use nalgebra::{Complex, Matrix4};

/// `−Σ λ ln λ` of `ρ ⊗ σ` from a general 4×4 Hermitian eigensolver.
pub fn kron_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> f64 {
    let k = rho.kron(sigma);
    let m = Matrix4::from_fn(|i, j| Complex::new(k[i][j].re, k[i][j].im));
    let eig = m.symmetric_eigenvalues();
    eig.iter()
        .map(|&l| if l > 0.0 { -l * l.ln() } else { 0.0 })
        .sum()
}

/// Entropy of a qubit state from its Bloch radius.
pub fn binary_entropy_from_radius(r: f64) -> f64 {
    [(1.0 + r) / 2.0, (1.0 - r) / 2.0]
        .iter()
        .map(|&p| if p > 0.0 { -p * p.ln() } else { 0.0 })
        .sum()
}

/// Mean of `ln|r(1−2x)|` over the same orbit the chaos-degree estimate uses.
pub fn logistic_lyapunov(r: f64, start: f64, transient: usize, samples: usize) -> f64 {
    let mut x = start;
    for _ in 0..transient {
        x = r * x * (1.0 - x);
    }
    let mut sum = 0.0;
    for _ in 0..samples {
        x = r * x * (1.0 - x);
        sum += (r * (1.0 - 2.0 * x)).abs().max(f64::MIN_POSITIVE).ln();
    }
    sum / samples as f64
}

/// Scalar transcription of the Baker map on the (x1, x2) plane.
pub fn baker_oracle(a: f64, x: [f64; 3]) -> [f64; 3] {
    let c = 0.5f64.sqrt();
    let mut x1 = x[0];
    let mut x2 = x[1];
    if x1.abs() > c + 1e-12 {
        x1 = 0.0;
    }
    if x2.abs() > c + 1e-12 {
        x2 = 0.0;
    }
    if x1 < 0.0 {
        [2.0 * a * (x1 + c) - c, a / 2.0 * (x2 + c) - c, 0.0]
    } else {
        [
            2.0 * a * (x1 + c) - 2.0f64.sqrt() * a - c,
            a / 2.0 * (x2 + c) + a * c - c,
            0.0,
        ]
    }
}
