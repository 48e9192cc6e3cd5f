//! Seeded random states and channels for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::channels::{baker_channel, BakerParams, Channel};
use crate::quantum::mat2::{self, Mat2};
use crate::quantum::{BlochVector, DensityMatrix};

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point in the closed unit ball.
pub fn bloch_in_ball<R: Rng>(rng: &mut R) -> BlochVector {
    loop {
        let x: [f64; 3] = [0; 3].map(|_| rng.gen_range(-1.0..=1.0));
        if x.iter().map(|c| c * c).sum::<f64>() <= 1.0 {
            return BlochVector::from_array_unchecked(x);
        }
    }
}

/// Uniform point on the unit sphere.
pub fn unit_vector<R: Rng>(rng: &mut R) -> BlochVector {
    loop {
        let x: [f64; 3] = [0; 3].map(|_| rng.gen_range(-1.0..=1.0));
        let n2 = x.iter().map(|c| c * c).sum::<f64>();
        if n2 > 1e-4 && n2 <= 1.0 {
            let n = n2.sqrt();
            return BlochVector::from_array_unchecked(x.map(|c| c / n));
        }
    }
}

pub fn density_matrix<R: Rng>(rng: &mut R) -> DensityMatrix {
    DensityMatrix::from_bloch(&bloch_in_ball(rng))
}

pub fn pure_state<R: Rng>(rng: &mut R) -> DensityMatrix {
    DensityMatrix::from_bloch(&unit_vector(rng))
}

pub fn hermitian<R: Rng>(rng: &mut R) -> Mat2 {
    let h0 = rng.gen_range(-2.0..=2.0);
    let h = [0; 3].map(|_| rng.gen_range(-2.0..=2.0));
    mat2::from_pauli_coefficients(h0, h)
}

pub fn unitary_channel<R: Rng>(rng: &mut R) -> Channel {
    let t = rng.gen_range(-std::f64::consts::PI..=std::f64::consts::PI);
    Channel::unitary(hermitian(rng), t).expect("sampled generator is Hermitian")
}

pub fn measurement_channel<R: Rng>(rng: &mut R) -> Channel {
    Channel::measurement_along(&unit_vector(rng)).expect("sampled axis is a unit vector")
}

/// One of the five channel families, chosen uniformly.
pub fn any_channel<R: Rng>(rng: &mut R) -> Channel {
    match rng.gen_range(0..5) {
        0 => unitary_channel(rng),
        1 => Channel::constant(density_matrix(rng)),
        2 => Channel::exponential_mixing(rng.gen_range(0.01..=5.0), density_matrix(rng))
            .expect("positive rate"),
        3 => measurement_channel(rng),
        _ => baker_channel(BakerParams::new(rng.gen_range(0.0..=1.0)).expect("a in [0, 1]"))
            .expect("baker map stays in the ball"),
    }
}
