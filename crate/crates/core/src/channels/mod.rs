//! Qubit channels: unitary conjugation, constant replacement, exponential
//! mixing toward a fixed state, projective measurement, and nonlinear maps
//! of the Bloch ball.

mod baker;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

pub use baker::{baker_channel, baker_map, BakerParams, BRANCH_EDGE};

use crate::error::{EcdError, Result};
use crate::quantum::mat2::{self, Mat2, IDENTITY};
use crate::quantum::{BlochVector, DensityMatrix, NORM_TOLERANCE};

/// Tolerance on `Σ P_k = I` and on each projector's Hermiticity/idempotence.
pub const PROJECTOR_TOLERANCE: f64 = 1e-12;
/// Points per axis of the grid used to check a Bloch map stays in the ball.
const BLOCH_MAP_GRID: usize = 20;

type BlochFn = dyn Fn([f64; 3]) -> [f64; 3] + Send + Sync;

/// `ρ ↦ U ρ U*` with `U = exp(itH)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Unitary {
    generator: Mat2,
    time: f64,
    matrix: Mat2,
}

impl Unitary {
    pub fn generator(&self) -> &Mat2 {
        &self.generator
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    /// The propagator `exp(itH)`.
    pub fn matrix(&self) -> &Mat2 {
        &self.matrix
    }
}

/// `exp(itH)` for Hermitian `H = h0·I + h·σ`:
/// `e^{i t h0} (cos(t|h|) I + i sin(t|h|) ĥ·σ)`.
fn exp_i_hermitian(h: &Mat2, t: f64) -> Mat2 {
    let (h0, hv) = mat2::pauli_coefficients(h);
    let len = (hv[0] * hv[0] + hv[1] * hv[1] + hv[2] * hv[2]).sqrt();
    let phase = Complex64::from_polar(1.0, t * h0);
    if len == 0.0 {
        return mat2::scale(&IDENTITY, phase);
    }
    let (s, c) = (t * len).sin_cos();
    let n = hv.map(|x| x / len);
    // cos·I + i·sin·(n·σ)
    let rot = [
        [
            Complex64::new(c, s * n[2]),
            Complex64::new(s * n[1], s * n[0]),
        ],
        [
            Complex64::new(-s * n[1], s * n[0]),
            Complex64::new(c, -s * n[2]),
        ],
    ];
    mat2::scale(&rot, phase)
}

/// A nonlinear channel `ρ = ½(I + σ·X) ↦ ½(I + σ·f(X))`.
#[derive(Clone)]
pub struct BlochMap {
    name: String,
    map: Arc<BlochFn>,
}

impl BlochMap {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Applies `f` to a Bloch vector, rejecting outputs outside the ball.
    pub fn apply_vector(&self, x: &BlochVector) -> Result<BlochVector> {
        let out = (self.map)(x.components());
        BlochVector::from_array(out).map_err(|e| {
            EcdError::InvalidChannel(format!("Bloch map `{}` left the ball: {e}", self.name))
        })
    }
}

impl fmt::Debug for BlochMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BlochMap").field("name", &self.name).finish()
    }
}

#[derive(Clone, Debug)]
pub enum Channel {
    Unitary(Unitary),
    Constant(DensityMatrix),
    ExponentialMixing { rate: f64, target: DensityMatrix },
    Measurement(Vec<Mat2>),
    BlochMap(BlochMap),
}

impl Channel {
    /// Unitary evolution generated by a Hermitian `H` for time `t`.
    pub fn unitary(generator: Mat2, time: f64) -> Result<Self> {
        if !time.is_finite() {
            return Err(EcdError::InvalidChannel("unitary time must be finite".into()));
        }
        if !mat2::is_hermitian(&generator, PROJECTOR_TOLERANCE) {
            return Err(EcdError::InvalidChannel("generator is not Hermitian".into()));
        }
        let matrix = exp_i_hermitian(&generator, time);
        Ok(Channel::Unitary(Unitary {
            generator,
            time,
            matrix,
        }))
    }

    pub fn constant(state: DensityMatrix) -> Self {
        Channel::Constant(state)
    }

    /// `ρ ↦ e^{−λ}ρ + (1 − e^{−λ})ρ₀` for `λ > 0`.
    pub fn exponential_mixing(rate: f64, target: DensityMatrix) -> Result<Self> {
        if !(rate > 0.0 && rate.is_finite()) {
            return Err(EcdError::InvalidChannel(format!(
                "mixing rate must be positive, got {rate}"
            )));
        }
        Ok(Channel::ExponentialMixing { rate, target })
    }

    /// `ρ ↦ Σ_k P_k ρ P_k` for orthogonal projectors resolving the identity.
    pub fn measurement(projectors: Vec<Mat2>) -> Result<Self> {
        if projectors.is_empty() {
            return Err(EcdError::InvalidChannel("no projectors given".into()));
        }
        for (k, p) in projectors.iter().enumerate() {
            if !mat2::is_hermitian(p, PROJECTOR_TOLERANCE) {
                return Err(EcdError::InvalidChannel(format!("P_{k} is not Hermitian")));
            }
            if mat2::max_abs_diff(&mat2::mul(p, p), p) > PROJECTOR_TOLERANCE {
                return Err(EcdError::InvalidChannel(format!("P_{k} is not a projector")));
            }
        }
        let sum = projectors
            .iter()
            .fold([[Complex64::new(0.0, 0.0); 2]; 2], |acc, p| mat2::add(&acc, p));
        if mat2::max_abs_diff(&sum, &IDENTITY) > PROJECTOR_TOLERANCE {
            return Err(EcdError::InvalidChannel(
                "projectors do not sum to the identity".into(),
            ));
        }
        Ok(Channel::Measurement(projectors))
    }

    /// Projective measurement along the Bloch axis `axis` (unit vector).
    pub fn measurement_along(axis: &BlochVector) -> Result<Self> {
        if (axis.norm() - 1.0).abs() > NORM_TOLERANCE {
            return Err(EcdError::InvalidChannel(format!(
                "measurement axis must be a unit vector, got norm {}",
                axis.norm()
            )));
        }
        let up = *DensityMatrix::from_bloch(axis).matrix();
        let down = *DensityMatrix::from_bloch(&axis.antipode()).matrix();
        Self::measurement(vec![up, down])
    }

    /// Wraps `f` as a channel after checking it keeps a grid of the unit
    /// ball inside the ball.
    pub fn bloch_map<F>(name: impl Into<String>, f: F) -> Result<Self>
    where
        F: Fn([f64; 3]) -> [f64; 3] + Send + Sync + 'static,
    {
        let name = name.into();
        let step = 2.0 / (BLOCH_MAP_GRID - 1) as f64;
        for i in 0..BLOCH_MAP_GRID {
            for j in 0..BLOCH_MAP_GRID {
                for k in 0..BLOCH_MAP_GRID {
                    let x = [i, j, k].map(|n| -1.0 + step * n as f64);
                    if x.iter().map(|c| c * c).sum::<f64>() > 1.0 {
                        continue;
                    }
                    let y = f(x);
                    let norm = y.iter().map(|c| c * c).sum::<f64>().sqrt();
                    if !(norm <= 1.0 + NORM_TOLERANCE) {
                        return Err(EcdError::InvalidChannel(format!(
                            "Bloch map `{name}` sends {x:?} to {y:?} outside the ball"
                        )));
                    }
                }
            }
        }
        Ok(Channel::BlochMap(BlochMap {
            name,
            map: Arc::new(f),
        }))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Channel::Unitary(_) => "unitary",
            Channel::Constant(_) => "constant",
            Channel::ExponentialMixing { .. } => "exponential-mixing",
            Channel::Measurement(_) => "measurement",
            Channel::BlochMap(_) => "bloch-map",
        }
    }

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        match self {
            Channel::Unitary(u) => {
                let m = mat2::mul(&mat2::mul(&u.matrix, rho.matrix()), &mat2::adjoint(&u.matrix));
                finish_linear(m)
            }
            Channel::Constant(target) => Ok(*target),
            Channel::ExponentialMixing { rate, target } => {
                let keep = (-rate).exp();
                let m = mat2::add(
                    &mat2::scale(rho.matrix(), keep.into()),
                    &mat2::scale(target.matrix(), (1.0 - keep).into()),
                );
                finish_linear(m)
            }
            Channel::Measurement(projectors) => {
                let m = projectors.iter().fold(
                    [[Complex64::new(0.0, 0.0); 2]; 2],
                    |acc, p| mat2::add(&acc, &mat2::mul(&mat2::mul(p, rho.matrix()), p)),
                );
                finish_linear(m)
            }
            Channel::BlochMap(map) => {
                let x = map.apply_vector(&rho.to_bloch())?;
                Ok(DensityMatrix::from_bloch(&x))
            }
        }
    }
}

/// Removes rounding asymmetry before validation.
fn finish_linear(m: Mat2) -> Result<DensityMatrix> {
    let herm = mat2::scale(&mat2::add(&m, &mat2::adjoint(&m)), 0.5.into());
    DensityMatrix::new(herm).map_err(|e| EcdError::InvalidChannel(e.to_string()))
}

pub fn apply_channel(channel: &Channel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    channel.apply(rho)
}
