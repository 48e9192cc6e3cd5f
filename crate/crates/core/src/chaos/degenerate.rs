//! Infimum of the chaos degree over the decompositions of a state with a
//! degenerate spectrum.
//!
//! Any antipodal pair `{u, −u}` of pure states diagonalizes a state
//! proportional to the identity, so the search runs over the unit sphere:
//! a Fibonacci-lattice scan followed by Nelder–Mead on a tangent-plane
//! chart around the best lattice point.

use std::f64::consts::PI;

use super::eigenstate_entropy;
use crate::channels::Channel;
use crate::error::Result;
use crate::quantum::BlochVector;

const LATTICE_POINTS: usize = 1000;
const SIMPLEX_TOLERANCE: f64 = 1e-8;
const MAX_ITERATIONS: usize = 400;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DegenerateMinimum {
    pub value: f64,
    /// Eigenstate paired with the first weight; its antipode takes the second.
    pub axis: BlochVector,
}

/// Points spread near-uniformly over the unit sphere.
pub fn fibonacci_sphere(count: usize) -> Vec<BlochVector> {
    let golden = PI * (3.0 - 5.0f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / count as f64;
            let rho = (1.0 - z * z).max(0.0).sqrt();
            let theta = golden * i as f64;
            unit([rho * theta.cos(), rho * theta.sin(), z])
        })
        .collect()
}

fn unit(x: [f64; 3]) -> BlochVector {
    let n = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    BlochVector::from_array_unchecked(x.map(|c| c / n))
}

/// `λ₁ S(u) + λ₂ S(−u)` where `S` is the horizon-averaged image entropy.
pub fn decomposition_value(
    channel: &Channel,
    weights: [f64; 2],
    axis: &BlochVector,
    horizon: usize,
) -> Result<f64> {
    let up = eigenstate_entropy(channel, axis, horizon)?;
    let down = eigenstate_entropy(channel, &axis.antipode(), horizon)?;
    Ok(weights[0] * up + weights[1] * down)
}

/// Orthonormal tangent basis at a unit vector.
fn tangent_basis(u: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    let helper = if u[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let dot = helper[0] * u[0] + helper[1] * u[1] + helper[2] * u[2];
    let e1 = [0, 1, 2].map(|i| helper[i] - dot * u[i]);
    let n1 = (e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]).sqrt();
    let e1 = e1.map(|c| c / n1);
    let e2 = [
        u[1] * e1[2] - u[2] * e1[1],
        u[2] * e1[0] - u[0] * e1[2],
        u[0] * e1[1] - u[1] * e1[0],
    ];
    (e1, e2)
}

/// Minimizes [`decomposition_value`] over the sphere. The canonical `+ẑ`
/// basis is always a candidate, so the result never exceeds its value.
pub fn minimize_degenerate(
    channel: &Channel,
    weights: [f64; 2],
    horizon: usize,
) -> Result<DegenerateMinimum> {
    let eval = |axis: &BlochVector| decomposition_value(channel, weights, axis, horizon);

    let mut best = DegenerateMinimum {
        value: eval(&BlochVector::NORTH)?,
        axis: BlochVector::NORTH,
    };
    for axis in fibonacci_sphere(LATTICE_POINTS) {
        let value = eval(&axis)?;
        if value < best.value {
            best = DegenerateMinimum { value, axis };
        }
    }
    if best.value == 0.0 {
        return Ok(best);
    }

    // Nelder–Mead in the chart (s, t) ↦ normalize(u₀ + s e₁ + t e₂).
    let origin = best.axis.components();
    let (e1, e2) = tangent_basis(origin);
    let chart = |p: [f64; 2]| unit([0, 1, 2].map(|i| origin[i] + p[0] * e1[i] + p[1] * e2[i]));
    let spacing = (4.0 * PI / LATTICE_POINTS as f64).sqrt();

    let mut simplex: Vec<([f64; 2], f64)> = Vec::with_capacity(3);
    for p in [[0.0, 0.0], [spacing, 0.0], [0.0, spacing]] {
        simplex.push((p, eval(&chart(p))?));
    }
    for _ in 0..MAX_ITERATIONS {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let spread = simplex[2].1 - simplex[0].1;
        let size = simplex[1..]
            .iter()
            .map(|(p, _)| (p[0] - simplex[0].0[0]).hypot(p[1] - simplex[0].0[1]))
            .fold(0.0, f64::max);
        if spread < SIMPLEX_TOLERANCE && size < 1e-6 {
            break;
        }
        let centroid = [
            0.5 * (simplex[0].0[0] + simplex[1].0[0]),
            0.5 * (simplex[0].0[1] + simplex[1].0[1]),
        ];
        let toward = |coef: f64| {
            let w = simplex[2].0;
            [
                centroid[0] + coef * (w[0] - centroid[0]),
                centroid[1] + coef * (w[1] - centroid[1]),
            ]
        };
        let reflected = toward(-1.0);
        let fr = eval(&chart(reflected))?;
        if fr < simplex[0].1 {
            let expanded = toward(-2.0);
            let fe = eval(&chart(expanded))?;
            simplex[2] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < simplex[1].1 {
            simplex[2] = (reflected, fr);
        } else {
            let contracted = if fr < simplex[2].1 { toward(-0.5) } else { toward(0.5) };
            let fc = eval(&chart(contracted))?;
            if fc < simplex[2].1.min(fr) {
                simplex[2] = (contracted, fc);
            } else {
                let anchor = simplex[0].0;
                for vertex in simplex.iter_mut().skip(1) {
                    let p = [
                        anchor[0] + 0.5 * (vertex.0[0] - anchor[0]),
                        anchor[1] + 0.5 * (vertex.0[1] - anchor[1]),
                    ];
                    *vertex = (p, eval(&chart(p))?);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    if simplex[0].1 < best.value {
        best = DegenerateMinimum {
            value: simplex[0].1,
            axis: chart(simplex[0].0),
        };
    }
    Ok(best)
}
