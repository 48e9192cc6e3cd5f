//! Schatten (spectral) decomposition of a qubit density matrix.
//!
//! For ρ = ½(I + σ·X) with r = ‖X‖ the eigenvalues are (1 ± r)/2 and the
//! eigenprojectors are the pure states with Bloch vectors ±X/r.

use super::entropy::clip_probability;
use super::mat2::{self, Mat2};
use super::state::{BlochVector, DensityMatrix};

/// Eigenvalue gap below which a spectrum is reported as degenerate.
pub const DEGENERACY_THRESHOLD: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralComponent {
    pub weight: f64,
    /// Pure eigenstate, unit Bloch vector.
    pub state: BlochVector,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralDecomposition {
    /// Ordered by descending weight; the two states are antipodal.
    pub components: [SpectralComponent; 2],
    pub degenerate: bool,
}

impl SpectralDecomposition {
    pub fn weights(&self) -> [f64; 2] {
        self.components.map(|c| c.weight)
    }

    /// The decomposition of a state with the given spectrum along axis `u`.
    pub fn along_axis(weights: [f64; 2], axis: BlochVector) -> Self {
        let degenerate = (weights[0] - weights[1]).abs() < DEGENERACY_THRESHOLD;
        SpectralDecomposition {
            components: [
                SpectralComponent {
                    weight: weights[0],
                    state: axis,
                },
                SpectralComponent {
                    weight: weights[1],
                    state: axis.antipode(),
                },
            ],
            degenerate,
        }
    }

    /// Σ λ_k E_k as a matrix.
    pub fn reconstruct(&self) -> Mat2 {
        self.components.iter().fold([[Default::default(); 2]; 2], |acc, c| {
            let proj = DensityMatrix::from_bloch(&c.state);
            mat2::add(&acc, &mat2::scale(proj.matrix(), c.weight.into()))
        })
    }
}

pub fn spectral_decompose(rho: &DensityMatrix) -> SpectralDecomposition {
    let x = rho.to_bloch();
    let r = x.norm();
    let weights = [
        clip_probability(0.5 * (1.0 + r)),
        clip_probability(0.5 * (1.0 - r)),
    ];
    let axis = if r == 0.0 {
        // I/2 exactly: canonical ±ẑ basis.
        BlochVector::NORTH
    } else {
        let [a, b, c] = x.components();
        BlochVector::from_array_unchecked([a / r, b / r, c / r])
    };
    SpectralDecomposition::along_axis(weights, axis)
}
