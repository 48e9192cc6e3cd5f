//! Seeded checks of the stability properties of the quantum chaos degree:
//! unitary channels give zero, constant and exponential-mixing channels
//! give the entropy of their target, projective measurements give a
//! constant that vanishes when the projectors commute with the state.

use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::channels::{Channel, Unitary};
use crate::chaos::{chaos_degree_multi_step, chaos_degree_one_step};
use crate::error::Result;
use crate::quantum::{von_neumann_entropy, BlochVector, DensityMatrix};
use crate::sampling;

/// Maximum deviation tolerated by every check.
pub const THEOREM_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_INSTANCES: usize = 100;
const MAX_STEPS: usize = 20;
const MAX_HORIZON: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TheoremOptions {
    pub seed: u64,
    pub instances: usize,
    /// Replaces the unitary channels by `(1 − ε)`-contracted rotations;
    /// any `ε > 0` must make the unitary check fail.
    pub unitary_perturbation: f64,
}

impl TheoremOptions {
    pub fn with_seed(seed: u64) -> Self {
        TheoremOptions {
            seed,
            instances: DEFAULT_INSTANCES,
            unitary_perturbation: 0.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub samples: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl PropertyCheck {
    pub fn passed(&self) -> bool {
        self.max_deviation < self.tolerance
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub seed: u64,
    pub checks: Vec<PropertyCheck>,
    pub elapsed: Duration,
}

impl TheoremReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(PropertyCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "stability properties (seed {}):", self.seed)?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {:<28} samples={:<4} max deviation={:.3e} (tol {:.0e})",
                if c.passed() { "PASS" } else { "FAIL" },
                c.name,
                c.samples,
                c.max_deviation,
                c.tolerance
            )?;
        }
        write!(f, "elapsed: {:.3} s", self.elapsed.as_secs_f64())
    }
}

pub const UNITARY: &str = "unitary-zero";
pub const CONSTANT: &str = "constant-target-entropy";
pub const MIXING: &str = "mixing-target-entropy";
pub const MEASUREMENT_CONSTANT: &str = "measurement-constant";
pub const MEASUREMENT_COMMUTING: &str = "measurement-commuting-zero";

/// `|D_one − expected|` and `|D_multi − expected|`, whichever is larger.
fn deviation(
    channel: &Channel,
    initial: &DensityMatrix,
    steps: usize,
    horizon: usize,
    expected: f64,
) -> Result<f64> {
    let one = chaos_degree_one_step(channel, initial, steps)?.value;
    let multi = chaos_degree_multi_step(channel, initial, steps, horizon)?.value;
    Ok((one - expected).abs().max((multi - expected).abs()))
}

/// A unitary rotation followed by a contraction toward `I/2`.
pub fn perturbed_unitary(unitary: Unitary, epsilon: f64) -> Result<Channel> {
    let exact = Channel::Unitary(unitary);
    Channel::bloch_map(format!("unitary contracted by {epsilon}"), move |x| {
        let rho = DensityMatrix::from_bloch(&BlochVector::from_array_unchecked(x));
        let rotated = exact.apply(&rho).expect("unitary image is a state").to_bloch();
        rotated.components().map(|c| (1.0 - epsilon) * c)
    })
}

fn check_unitary<R: Rng>(rng: &mut R, opts: &TheoremOptions) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..opts.instances {
        let mut channel = sampling::unitary_channel(rng);
        if opts.unitary_perturbation != 0.0 {
            let Channel::Unitary(u) = channel else { unreachable!() };
            channel = perturbed_unitary(u, opts.unitary_perturbation)?;
        }
        let initial = sampling::density_matrix(rng);
        let n = rng.gen_range(1..=MAX_STEPS);
        let m = rng.gen_range(1..=MAX_HORIZON);
        worst = worst.max(deviation(&channel, &initial, n, m, 0.0)?);
    }
    Ok(worst)
}

fn check_constant<R: Rng>(rng: &mut R, opts: &TheoremOptions) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..opts.instances {
        let target = sampling::density_matrix(rng);
        let channel = Channel::constant(target);
        let initial = sampling::density_matrix(rng);
        let n = rng.gen_range(1..=MAX_STEPS);
        let m = rng.gen_range(1..=MAX_HORIZON);
        let expected = von_neumann_entropy(&target);
        worst = worst.max(deviation(&channel, &initial, n, m, expected)?);
    }
    Ok(worst)
}

/// Pure targets, evolved until `e^{−nλ}` is below double precision.
fn check_mixing<R: Rng>(rng: &mut R, opts: &TheoremOptions) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..opts.instances {
        let rate = loop {
            let r: f64 = rng.gen_range(0.0..=5.0);
            if r > 0.0 {
                break r;
            }
        };
        let target = sampling::pure_state(rng);
        let channel = Channel::exponential_mixing(rate, target)?;
        let initial = sampling::density_matrix(rng);
        let n = (40.0 / rate).ceil() as usize;
        let m = rng.gen_range(1..=MAX_HORIZON);
        let expected = von_neumann_entropy(&target);
        worst = worst.max(deviation(&channel, &initial, n, m, expected)?);
    }
    Ok(worst)
}

/// Spread of `D` over `n = 1..=20` for random measurement axes.
fn check_measurement_constant<R: Rng>(rng: &mut R, opts: &TheoremOptions) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..opts.instances {
        let channel = sampling::measurement_channel(rng);
        let initial = sampling::density_matrix(rng);
        let m = rng.gen_range(1..=MAX_HORIZON);
        let mut values = Vec::with_capacity(2 * MAX_STEPS);
        for n in 1..=MAX_STEPS {
            values.push(chaos_degree_one_step(&channel, &initial, n)?.value);
            values.push(chaos_degree_multi_step(&channel, &initial, n, m)?.value);
        }
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        worst = worst.max(hi - lo);
    }
    Ok(worst)
}

/// Initial states diagonal in the measurement basis.
fn check_measurement_commuting<R: Rng>(rng: &mut R, opts: &TheoremOptions) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..opts.instances {
        let axis = sampling::unit_vector(rng);
        let channel = Channel::measurement_along(&axis)?;
        let initial = DensityMatrix::from_bloch(&axis.scaled(rng.gen_range(-1.0..=1.0))?);
        let n = rng.gen_range(1..=MAX_STEPS);
        let m = rng.gen_range(1..=MAX_HORIZON);
        worst = worst.max(deviation(&channel, &initial, n, m, 0.0)?);
    }
    Ok(worst)
}

pub fn run_theorem_suite_with(opts: &TheoremOptions) -> Result<TheoremReport> {
    let started = Instant::now();
    type Check = fn(&mut sampling::SeededRng, &TheoremOptions) -> Result<f64>;
    let checks: [(&'static str, Check); 5] = [
        (UNITARY, check_unitary),
        (CONSTANT, check_constant),
        (MIXING, check_mixing),
        (MEASUREMENT_CONSTANT, check_measurement_constant),
        (MEASUREMENT_COMMUTING, check_measurement_commuting),
    ];
    let mut results = Vec::with_capacity(checks.len());
    for (i, (name, check)) in checks.into_iter().enumerate() {
        // independent stream per property
        let mut rng = sampling::seeded_rng(opts.seed.wrapping_add(i as u64 * 0x9E37_79B9));
        results.push(PropertyCheck {
            name,
            samples: opts.instances,
            max_deviation: check(&mut rng, opts)?,
            tolerance: THEOREM_TOLERANCE,
        });
    }
    Ok(TheoremReport {
        seed: opts.seed,
        checks: results,
        elapsed: started.elapsed(),
    })
}

pub fn run_theorem_suite(seed: u64) -> Result<TheoremReport> {
    run_theorem_suite_with(&TheoremOptions::with_seed(seed))
}
