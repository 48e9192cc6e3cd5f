//! Minimal dense 2×2 complex matrix helpers.

use num_complex::Complex64;

pub type Mat2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

pub const IDENTITY: Mat2 = [[ONE, ZERO], [ZERO, ONE]];

/// Pauli matrices σ₁, σ₂, σ₃.
pub const PAULI: [Mat2; 3] = [
    [[ZERO, ONE], [ONE, ZERO]],
    [[ZERO, Complex64::new(0.0, -1.0)], [I, ZERO]],
    [[ONE, ZERO], [ZERO, Complex64::new(-1.0, 0.0)]],
];

pub fn mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn adjoint(a: &Mat2) -> Mat2 {
    [
        [a[0][0].conj(), a[1][0].conj()],
        [a[0][1].conj(), a[1][1].conj()],
    ]
}

pub fn add(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        [a[0][0] + b[0][0], a[0][1] + b[0][1]],
        [a[1][0] + b[1][0], a[1][1] + b[1][1]],
    ]
}

pub fn scale(a: &Mat2, s: Complex64) -> Mat2 {
    [[a[0][0] * s, a[0][1] * s], [a[1][0] * s, a[1][1] * s]]
}

pub fn trace(a: &Mat2) -> Complex64 {
    a[0][0] + a[1][1]
}

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_diff(a: &Mat2, b: &Mat2) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            worst = worst.max((a[i][j] - b[i][j]).norm());
        }
    }
    worst
}

pub fn is_hermitian(a: &Mat2, tol: f64) -> bool {
    max_abs_diff(a, &adjoint(a)) <= tol
}

/// Closed-form eigenvalues of a Hermitian 2×2 matrix, descending.
///
/// Only the Hermitian part is read: diagonal real parts and the lower
/// off-diagonal entry.
pub fn hermitian_eigenvalues(a: &Mat2) -> [f64; 2] {
    let mean = 0.5 * (a[0][0].re + a[1][1].re);
    let half_gap = 0.5 * (a[0][0].re - a[1][1].re);
    let radius = half_gap.hypot(a[1][0].norm());
    [mean + radius, mean - radius]
}

/// Decomposes a Hermitian matrix as `h0·I + h·σ`, returning `(h0, h)`.
pub fn pauli_coefficients(a: &Mat2) -> (f64, [f64; 3]) {
    let h0 = 0.5 * (a[0][0].re + a[1][1].re);
    let h = [a[1][0].re, a[1][0].im, 0.5 * (a[0][0].re - a[1][1].re)];
    (h0, h)
}

/// Builds `h0·I + h·σ`.
pub fn from_pauli_coefficients(h0: f64, h: [f64; 3]) -> Mat2 {
    [
        [
            Complex64::new(h0 + h[2], 0.0),
            Complex64::new(h[0], -h[1]),
        ],
        [Complex64::new(h[0], h[1]), Complex64::new(h0 - h[2], 0.0)],
    ]
}
