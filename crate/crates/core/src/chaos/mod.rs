//! Quantum entropic chaos degree for a qubit channel `F*`.
//!
//! After `n` steps the state `F*ⁿρ` is split into its Schatten
//! decomposition `Σ_k λ_k E_k`; the one-step degree is `Σ_k λ_k S(F* E_k)`
//! and the `m`-step degree averages over `F*E_k ⊗ … ⊗ F*^m E_k`. Because von
//! Neumann entropy is additive over tensor factors, the `m`-step entropy
//! is `Σ_j S(F*^j E_k)` and no `2^m`-dimensional operator is formed.
//!
//! For nonlinear channels `F*E_k` applies the map to each pure eigenstate
//! separately; linearity is never assumed.

mod classify;
mod degenerate;

pub use classify::{classify, Classification, CONSTANT_THRESHOLD, ZERO_THRESHOLD};
pub use degenerate::{
    decomposition_value, fibonacci_sphere, minimize_degenerate, DegenerateMinimum,
};

use crate::channels::Channel;
use crate::error::{EcdError, Result};
use crate::quantum::{
    spectral_decompose, von_neumann_entropy, BlochVector, DensityMatrix, SpectralDecomposition,
};

/// How the decomposition entering the chaos degree was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionMethod {
    /// Non-degenerate spectrum: the Schatten decomposition is unique.
    Spectral,
    /// Degenerate spectrum: infimum over all antipodal eigenbases.
    DegenerateSearch,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenTerm {
    pub weight: f64,
    /// Image entropy of the eigenstate, averaged over the horizon.
    pub entropy: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChaosDegreeResult {
    /// Chaos degree in nats.
    pub value: f64,
    pub terms: [EigenTerm; 2],
    pub decomposition: SpectralDecomposition,
    pub method: DecompositionMethod,
    pub classification: Classification,
}

/// `F*ⁿ ρ₀`; `n = 0` returns `ρ₀`.
pub fn evolve(channel: &Channel, initial: &DensityMatrix, steps: usize) -> Result<DensityMatrix> {
    let mut rho = *initial;
    for _ in 0..steps {
        rho = channel.apply(&rho)?;
    }
    Ok(rho)
}

/// `(1/m) Σ_{j=1..m} S(F*^j E)` for a pure eigenstate `E`.
pub fn eigenstate_entropy(channel: &Channel, state: &BlochVector, horizon: usize) -> Result<f64> {
    let mut rho = DensityMatrix::from_bloch(state);
    let mut total = 0.0;
    for _ in 0..horizon {
        rho = channel.apply(&rho)?;
        total += von_neumann_entropy(&rho);
    }
    Ok(total / horizon as f64)
}

fn degree_of_decomposition(
    channel: &Channel,
    decomposition: SpectralDecomposition,
    horizon: usize,
    method: DecompositionMethod,
) -> Result<ChaosDegreeResult> {
    let mut terms = [EigenTerm {
        weight: 0.0,
        entropy: 0.0,
    }; 2];
    for (term, comp) in terms.iter_mut().zip(decomposition.components.iter()) {
        term.weight = comp.weight;
        // zero-weight components do not contribute
        term.entropy = if comp.weight > 0.0 {
            eigenstate_entropy(channel, &comp.state, horizon)?
        } else {
            0.0
        };
    }
    let value = (terms[0].weight * terms[0].entropy + terms[1].weight * terms[1].entropy).max(0.0);
    Ok(ChaosDegreeResult {
        value,
        terms,
        decomposition,
        method,
        classification: Classification::UnclassifiedSinglePoint,
    })
}

/// Chaos degree of the state `ρ` (already evolved) over `horizon` steps.
pub fn chaos_degree_of_state(
    channel: &Channel,
    rho: &DensityMatrix,
    horizon: usize,
) -> Result<ChaosDegreeResult> {
    if horizon == 0 {
        return Err(EcdError::InvalidParameter("horizon m must be at least 1".into()));
    }
    let decomposition = spectral_decompose(rho);
    if decomposition.degenerate {
        let weights = decomposition.weights();
        let min = minimize_degenerate(channel, weights, horizon)?;
        let chosen = SpectralDecomposition::along_axis(weights, min.axis);
        degree_of_decomposition(channel, chosen, horizon, DecompositionMethod::DegenerateSearch)
    } else {
        degree_of_decomposition(channel, decomposition, horizon, DecompositionMethod::Spectral)
    }
}

/// `D_q(F*ⁿρ₀; F*)`.
pub fn chaos_degree_one_step(
    channel: &Channel,
    initial: &DensityMatrix,
    steps: usize,
) -> Result<ChaosDegreeResult> {
    chaos_degree_multi_step(channel, initial, steps, 1)
}

/// `D_q(F*ⁿρ₀; Λ*_m)` with `Λ*_m σ = F*σ ⊗ … ⊗ F*^m σ`.
pub fn chaos_degree_multi_step(
    channel: &Channel,
    initial: &DensityMatrix,
    steps: usize,
    horizon: usize,
) -> Result<ChaosDegreeResult> {
    if steps == 0 {
        return Err(EcdError::InvalidParameter("step count n must be at least 1".into()));
    }
    let rho = evolve(channel, initial, steps)?;
    chaos_degree_of_state(channel, &rho, horizon)
}
