//! Entropic chaos degree of qubit channels and classical maps.
//!
//! The quantum degree of a channel `F*` at state `ρ` decomposes `F*ⁿρ` into
//! orthogonal pure states and averages the entropy those states acquire
//! under the channel. Zero means the dynamics keeps pure states pure, a
//! nonzero constant means weak stability, and a varying positive value
//! marks chaos. The classical degree does the same for the transition law
//! of an orbit on a finite partition.
//!
//! ```
//! use ecd_core::channels::{baker_channel, BakerParams};
//! use ecd_core::chaos::chaos_degree_multi_step;
//! use ecd_core::quantum::{BlochVector, DensityMatrix};
//!
//! let rho = DensityMatrix::from_bloch(&BlochVector::new(0.3, 0.3, 0.3)?);
//! let stable = baker_channel(BakerParams::new(0.25)?)?;
//! let chaotic = baker_channel(BakerParams::new(0.8)?)?;
//! assert!(chaos_degree_multi_step(&stable, &rho, 500, 100)?.value < 1e-6);
//! assert!(chaos_degree_multi_step(&chaotic, &rho, 500, 100)?.value > 1e-3);
//! # Ok::<(), ecd_core::EcdError>(())
//! ```

// `!(x < y)` is used deliberately so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channels;
pub mod chaos;
pub mod classical;
mod error;
pub mod experiments;
pub mod quantum;
pub mod sampling;

pub use channels::{apply_channel, baker_channel, baker_map, BakerParams, Channel};
pub use chaos::{
    chaos_degree_multi_step, chaos_degree_one_step, classify, evolve, minimize_degenerate,
    ChaosDegreeResult, Classification, DecompositionMethod,
};
pub use classical::{
    build_histogram, classical_chaos_degree, iterate_orbit, ClassicalMap, Orbit,
    TransitionHistogram,
};
pub use error::{EcdError, Result};
pub use quantum::{
    bloch_to_density, density_to_bloch, spectral_decompose, von_neumann_entropy, BlochVector,
    DensityMatrix, SpectralDecomposition,
};
