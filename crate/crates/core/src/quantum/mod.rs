//! Qubit state representations, entropy and spectral decomposition.

mod entropy;
pub mod mat2;
mod spectral;
mod state;

pub use entropy::{entropy_from_bloch_norm, shannon_entropy, von_neumann_entropy};
pub use mat2::{Mat2, PAULI};
pub use spectral::{
    spectral_decompose, SpectralComponent, SpectralDecomposition, DEGENERACY_THRESHOLD,
};
pub use state::{
    bloch_to_density, density_to_bloch, BlochVector, DensityMatrix, DENSITY_TOLERANCE,
    NORM_TOLERANCE,
};
