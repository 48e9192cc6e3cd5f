//! Qubit states: Bloch vectors and 2×2 density matrices.

use std::fmt;

use num_complex::Complex64;

use super::mat2::{self, Mat2, PAULI};
use crate::error::{EcdError, Result};

/// Slack allowed on the unit-ball constraint `‖X‖ ≤ 1`.
pub const NORM_TOLERANCE: f64 = 1e-12;
/// Slack allowed on Hermiticity, unit trace and positivity of a density matrix.
pub const DENSITY_TOLERANCE: f64 = 1e-12;

/// A point in the closed unit ball of R³ parametrizing a qubit state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector([f64; 3]);

impl BlochVector {
    pub const ORIGIN: BlochVector = BlochVector([0.0, 0.0, 0.0]);
    pub const NORTH: BlochVector = BlochVector([0.0, 0.0, 1.0]);
    pub const SOUTH: BlochVector = BlochVector([0.0, 0.0, -1.0]);

    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        Self::from_array([x1, x2, x3])
    }

    pub fn from_array(x: [f64; 3]) -> Result<Self> {
        if x.iter().any(|c| !c.is_finite()) {
            return Err(EcdError::InvalidState(format!(
                "Bloch vector has non-finite component: {x:?}"
            )));
        }
        let v = BlochVector(x);
        if v.norm() > 1.0 + NORM_TOLERANCE {
            return Err(EcdError::InvalidState(format!(
                "Bloch vector {x:?} has norm {} > 1",
                v.norm()
            )));
        }
        Ok(v)
    }

    /// Skips validation; callers guarantee the ball constraint.
    pub(crate) const fn from_array_unchecked(x: [f64; 3]) -> Self {
        BlochVector(x)
    }

    pub fn x1(&self) -> f64 {
        self.0[0]
    }

    pub fn x2(&self) -> f64 {
        self.0[1]
    }

    pub fn x3(&self) -> f64 {
        self.0[2]
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn norm(&self) -> f64 {
        let [a, b, c] = self.0;
        (a * a + b * b + c * c).sqrt()
    }

    /// The antipodal point, i.e. the state orthogonal to a pure state.
    pub fn antipode(&self) -> Self {
        let [a, b, c] = self.0;
        BlochVector([-a, -b, -c])
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let [a, b, c] = self.0;
        Self::new(a * factor, b * factor, c * factor)
    }

    pub fn distance(&self, other: &BlochVector) -> f64 {
        let d: f64 = (0..3).map(|i| (self.0[i] - other.0[i]).powi(2)).sum();
        d.sqrt()
    }
}

impl fmt::Display for BlochVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// A 2×2 Hermitian, unit-trace, positive-semidefinite matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix(Mat2);

impl DensityMatrix {
    /// Validates and wraps a raw matrix.
    pub fn new(m: Mat2) -> Result<Self> {
        if m.iter().flatten().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(EcdError::InvalidState("non-finite matrix entry".into()));
        }
        if !mat2::is_hermitian(&m, DENSITY_TOLERANCE) {
            return Err(EcdError::InvalidState("matrix is not Hermitian".into()));
        }
        let tr = mat2::trace(&m);
        if (tr.re - 1.0).abs() > DENSITY_TOLERANCE || tr.im.abs() > DENSITY_TOLERANCE {
            return Err(EcdError::InvalidState(format!("trace {tr} differs from 1")));
        }
        let [_, low] = mat2::hermitian_eigenvalues(&m);
        if low < -DENSITY_TOLERANCE {
            return Err(EcdError::InvalidState(format!(
                "matrix has negative eigenvalue {low}"
            )));
        }
        Ok(DensityMatrix(m))
    }

    /// ρ = ½(I + σ·X).
    pub fn from_bloch(v: &BlochVector) -> Self {
        let m = mat2::from_pauli_coefficients(0.5, v.0.map(|c| 0.5 * c));
        DensityMatrix(m)
    }

    pub fn maximally_mixed() -> Self {
        Self::from_bloch(&BlochVector::ORIGIN)
    }

    /// Inverse of [`DensityMatrix::from_bloch`]: `x_j = Tr(ρ σ_j)`.
    pub fn to_bloch(&self) -> BlochVector {
        let m = &self.0;
        let x = [
            2.0 * m[1][0].re,
            2.0 * m[1][0].im,
            m[0][0].re - m[1][1].re,
        ];
        // A validated matrix can sit up to the tolerance outside the ball.
        BlochVector::from_array_unchecked(x)
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    /// Eigenvalues in descending order, without clipping.
    pub fn eigenvalues(&self) -> [f64; 2] {
        mat2::hermitian_eigenvalues(&self.0)
    }

    /// Expectation value `Tr(ρ σ_j)` for each Pauli matrix.
    pub fn pauli_expectations(&self) -> [f64; 3] {
        PAULI.map(|p| mat2::trace(&mat2::mul(&self.0, &p)).re)
    }

    /// Kronecker product `self ⊗ other` as a dense 4×4 matrix.
    pub fn kron(&self, other: &DensityMatrix) -> [[Complex64; 4]; 4] {
        let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        out[2 * i + k][2 * j + l] = self.0[i][j] * other.0[k][l];
                    }
                }
            }
        }
        out
    }
}

pub fn bloch_to_density(v: &BlochVector) -> DensityMatrix {
    DensityMatrix::from_bloch(v)
}

pub fn density_to_bloch(rho: &DensityMatrix) -> BlochVector {
    rho.to_bloch()
}
