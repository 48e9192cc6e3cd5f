mod common;

use std::collections::HashMap;
use std::f64::consts::{FRAC_1_SQRT_2, LN_2};

use approx::assert_abs_diff_eq;
use ecd_core::channels::{baker_channel, baker_map, BakerParams, Channel};
use ecd_core::chaos::{
    chaos_degree_multi_step, chaos_degree_one_step, classify, decomposition_value, evolve,
    fibonacci_sphere, minimize_degenerate, Classification,
};
use ecd_core::classical::{
    build_histogram, chaos_degree_of_map, classical_chaos_degree, iterate_orbit, ClassicalMap,
    OrbitSettings,
};
use ecd_core::experiments::{run_theorem_suite_with, theorem, TheoremOptions};
use ecd_core::quantum::{spectral_decompose, von_neumann_entropy, BlochVector, DensityMatrix};
use ecd_core::sampling::{self, seeded_rng};

fn bloch(x: f64, y: f64, z: f64) -> BlochVector {
    BlochVector::new(x, y, z).unwrap()
}

#[test]
fn eigenvalues_match_bloch_radius() {
    let rho = DensityMatrix::from_bloch(&bloch(0.3, 0.3, 0.3));
    let r = 0.3 * 3f64.sqrt();
    let [l1, l2] = rho.eigenvalues();
    assert_abs_diff_eq!(l1, (1.0 + r) / 2.0, epsilon = 1e-14);
    assert_abs_diff_eq!(l2, (1.0 - r) / 2.0, epsilon = 1e-14);
    assert_abs_diff_eq!(l1, 0.7598, epsilon = 1e-4);
}

#[test]
fn entropy_of_point_nine() {
    let rho = DensityMatrix::from_bloch(&bloch(0.0, 0.0, 0.8));
    let h = -(0.9f64 * 0.9f64.ln()) - 0.1 * 0.1f64.ln();
    assert_abs_diff_eq!(von_neumann_entropy(&rho), h, epsilon = 1e-14);
    assert_abs_diff_eq!(h, 0.325083, epsilon = 1e-6);
}

#[test]
fn decomposition_along_x() {
    let dec = spectral_decompose(&DensityMatrix::from_bloch(&bloch(0.6, 0.0, 0.0)));
    assert!(!dec.degenerate);
    assert_abs_diff_eq!(dec.components[0].weight, 0.8, epsilon = 1e-14);
    assert_abs_diff_eq!(dec.components[1].weight, 0.2, epsilon = 1e-14);
    assert!(dec.components[0].state.distance(&bloch(1.0, 0.0, 0.0)) < 1e-14);
    assert!(dec.components[1].state.distance(&bloch(-1.0, 0.0, 0.0)) < 1e-14);
}

#[test]
fn mixing_halves_bloch_vector() {
    let ch = Channel::exponential_mixing(LN_2, DensityMatrix::maximally_mixed()).unwrap();
    let out = ch.apply(&DensityMatrix::from_bloch(&bloch(0.0, 0.0, 1.0))).unwrap();
    assert!(out.to_bloch().distance(&bloch(0.0, 0.0, 0.5)) < 1e-15);
}

#[test]
fn baker_examples() {
    let half = BakerParams::new(0.5).unwrap();
    let y = baker_map(&bloch(0.3, 0.3, 0.3), half);
    let expected = common::baker_oracle(0.5, [0.3, 0.3, 0.3]);
    assert_eq!(y.components(), expected);
    assert_abs_diff_eq!(y.x1(), -0.4071068, epsilon = 1e-7);
    assert_abs_diff_eq!(y.x2(), -0.1017767, epsilon = 1e-7);

    let ch = baker_channel(half).unwrap();
    let rho = evolve(&ch, &DensityMatrix::from_bloch(&bloch(0.3, 0.3, 0.3)), 1).unwrap();
    assert!(rho.to_bloch().distance(&y) < 1e-14);

    // x1 = 1 exceeds the branch edge and is reset before f2 applies
    let y = baker_map(&bloch(1.0, 0.0, 0.0), half);
    assert_eq!(y.components(), common::baker_oracle(0.5, [0.0, 0.0, 0.0]));
}

#[test]
fn baker_at_zero_collapses() {
    let params = BakerParams::new(0.0).unwrap();
    let mut rng = seeded_rng(5);
    for _ in 0..20 {
        let mut x = sampling::bloch_in_ball(&mut rng);
        for _ in 0..10 {
            x = baker_map(&x, params);
        }
        assert!(x.distance(&bloch(-FRAC_1_SQRT_2, -FRAC_1_SQRT_2, 0.0)) < 1e-15);
    }
}

#[test]
fn baker_stable_point_long_run() {
    let ch = baker_channel(BakerParams::new(0.25).unwrap()).unwrap();
    let rho = DensityMatrix::from_bloch(&bloch(0.3, 0.3, 0.3));
    let d = chaos_degree_multi_step(&ch, &rho, 2000, 100).unwrap();
    assert!(d.value < 1e-9, "{}", d.value);
}

#[test]
fn constant_channel_degree_is_target_entropy() {
    let ch = Channel::constant(DensityMatrix::maximally_mixed());
    let rho = DensityMatrix::from_bloch(&bloch(0.1, -0.2, 0.4));
    for m in [1, 3, 10] {
        let d = chaos_degree_multi_step(&ch, &rho, 4, m).unwrap().value;
        assert_abs_diff_eq!(d, LN_2, epsilon = 1e-12);
    }
    assert_abs_diff_eq!(chaos_degree_one_step(&ch, &rho, 1).unwrap().value, LN_2, epsilon = 1e-12);
}

#[test]
fn mixing_to_pure_target_is_zero() {
    let target = DensityMatrix::from_bloch(&bloch(0.0, 1.0, 0.0));
    let ch = Channel::exponential_mixing(1.0, target).unwrap();
    let rho = DensityMatrix::from_bloch(&bloch(0.2, 0.2, -0.5));
    let d = chaos_degree_one_step(&ch, &rho, 40).unwrap().value;
    assert!(d < 1e-12, "{d}");
}

/// Brute force over a dense sphere grid, independent of the library's search.
#[test]
fn aligned_measurement_minimum_by_brute_force() {
    let ch = Channel::measurement_along(&BlochVector::NORTH).unwrap();
    let weights = [0.5, 0.5];
    let g = |u: &BlochVector| {
        [*u, u.antipode()]
            .iter()
            .zip(weights)
            .map(|(v, w)| w * von_neumann_entropy(&ch.apply(&DensityMatrix::from_bloch(v)).unwrap()))
            .sum::<f64>()
    };
    let grid = fibonacci_sphere(10_000);
    let (best_u, best) = grid
        .iter()
        .map(|u| (*u, g(u)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    assert!(best_u.x3().abs() > 0.999);
    assert!(best < 1e-3);
    assert_eq!(g(&BlochVector::NORTH), 0.0);

    let found = minimize_degenerate(&ch, weights, 1).unwrap();
    assert!(found.value <= best);
    assert_eq!(found.value, 0.0);
    assert!(found.axis.x3().abs() > 1.0 - 1e-12);

    let d = chaos_degree_one_step(&ch, &DensityMatrix::maximally_mixed(), 3).unwrap();
    assert_eq!(d.value, 0.0);
}

#[test]
fn degenerate_search_never_exceeds_lattice() {
    let mut rng = seeded_rng(8);
    let weights = [0.5, 0.5];
    for _ in 0..10 {
        let ch = sampling::any_channel(&mut rng);
        let found = minimize_degenerate(&ch, weights, 2).unwrap().value;
        for u in fibonacci_sphere(300) {
            assert!(found <= decomposition_value(&ch, weights, &u, 2).unwrap() + 1e-12);
        }
    }
}

#[test]
fn kron_entropy_oracle_agrees() {
    let mut rng = seeded_rng(4);
    for _ in 0..100 {
        let rho = sampling::density_matrix(&mut rng);
        let sigma = sampling::density_matrix(&mut rng);
        let joint = common::kron_entropy(&rho, &sigma);
        let sum = von_neumann_entropy(&rho) + von_neumann_entropy(&sigma);
        assert_abs_diff_eq!(joint, sum, epsilon = 1e-9);
    }
}

#[test]
fn perturbed_unitary_fails_property() {
    let mut rng = seeded_rng(21);
    let ch = sampling::unitary_channel(&mut rng);
    let Channel::Unitary(u) = ch else { unreachable!() };
    let perturbed = theorem::perturbed_unitary(u, 1e-3).unwrap();
    let rho = DensityMatrix::from_bloch(&bloch(0.1, 0.5, -0.3));
    let d = chaos_degree_one_step(&perturbed, &rho, 3).unwrap().value;
    // image of a pure state has radius 0.999
    let expected = common::binary_entropy_from_radius(0.999);
    assert_abs_diff_eq!(d, expected, epsilon = 1e-12);
    assert!(d > 1e-6);

    let report = run_theorem_suite_with(&TheoremOptions {
        unitary_perturbation: 1e-3,
        ..TheoremOptions::with_seed(0)
    })
    .unwrap();
    assert!(!report.all_passed());
    assert!(!report.check(theorem::UNITARY).unwrap().passed());
}

#[test]
fn measurement_degree_constant_in_time() {
    let mut rng = seeded_rng(31);
    for _ in 0..20 {
        let ch = sampling::measurement_channel(&mut rng);
        let rho = sampling::density_matrix(&mut rng);
        let trajectory: Vec<f64> = (1..=20)
            .map(|n| chaos_degree_one_step(&ch, &rho, n).unwrap().value)
            .collect();
        let c = classify(&trajectory).unwrap();
        assert!(matches!(c, Classification::WeakStable | Classification::Stable));
    }
}

#[test]
fn logistic_fixed_point_orbit() {
    let map = ClassicalMap::logistic(2.0).unwrap();
    let orbit = iterate_orbit(&map, [0.3, 0.0], 1000, 1000).unwrap();
    assert!(orbit.points.iter().all(|p| (p[0] - 0.5).abs() < 1e-12));
}

#[test]
fn logistic_four_fills_interval() {
    let map = ClassicalMap::logistic(4.0).unwrap();
    let orbit = iterate_orbit(&map, [0.3, 0.0], 1000, 100_000).unwrap();
    let h = build_histogram(&orbit, 100).unwrap();
    assert!(h.occupation().len() > 95);
    for (_, row) in h.conditional_rows() {
        assert_abs_diff_eq!(row.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
    }
}

/// Independent estimate: hash-map transition counts over the raw orbit.
fn histogram_oracle(xs: &[f64], bins: usize) -> f64 {
    let cell = |x: f64| ((x * bins as f64) as usize).min(bins - 1);
    let mut occupancy: HashMap<usize, f64> = HashMap::new();
    let mut pairs: HashMap<(usize, usize), f64> = HashMap::new();
    for x in xs {
        *occupancy.entry(cell(*x)).or_default() += 1.0;
    }
    for w in xs.windows(2) {
        *pairs.entry((cell(w[0]), cell(w[1]))).or_default() += 1.0;
    }
    let mut outgoing: HashMap<usize, f64> = HashMap::new();
    for ((i, _), c) in &pairs {
        *outgoing.entry(*i).or_default() += c;
    }
    let total = xs.len() as f64;
    let mut d = 0.0;
    for ((i, _), c) in &pairs {
        let p = c / outgoing[i];
        d -= occupancy[i] / total * p * p.ln();
    }
    d
}

#[test]
fn logistic_degree_matches_histogram_oracle() {
    let settings = OrbitSettings::default();
    for (r, lo, hi) in [(4.0, 0.5, f64::INFINITY), (3.2, 0.0, 0.05), (2.0, 0.0, 0.05)] {
        let map = ClassicalMap::logistic(r).unwrap();
        let orbit = iterate_orbit(&map, map.default_start(), settings.transient, settings.samples).unwrap();
        let xs: Vec<f64> = orbit.points.iter().map(|p| p[0]).collect();
        let d = classical_chaos_degree(&build_histogram(&orbit, settings.bins).unwrap());
        assert_abs_diff_eq!(d, histogram_oracle(&xs, settings.bins), epsilon = 1e-9);
        assert!(d >= lo && d < hi, "r = {r}: {d}");
        assert_eq!(d, chaos_degree_of_map(&map, settings).unwrap());
    }
}

#[test]
fn logistic_regression_baseline() {
    let d = chaos_degree_of_map(&ClassicalMap::logistic(4.0).unwrap(), OrbitSettings::default()).unwrap();
    assert_abs_diff_eq!(d, LOGISTIC_FOUR_BASELINE, epsilon = 1e-12);
}

const LOGISTIC_FOUR_BASELINE: f64 = 0.9768394664860623;

/// `r = 3` itself is excluded: convergence there is only algebraic.
#[test]
fn fixed_point_regime_is_quiet() {
    for i in 0..20 {
        let r = 2.0 + i as f64 * 0.05;
        let d = chaos_degree_of_map(&ClassicalMap::logistic(r).unwrap(), OrbitSettings::default()).unwrap();
        assert!(d < 0.05, "r = {r}: {d}");
    }
}

#[test]
fn lyapunov_oracle_sanity() {
    assert!(common::logistic_lyapunov(4.0, 0.3, 1000, 100_000) > 0.6);
    assert!(common::logistic_lyapunov(3.2, 0.3, 1000, 10_000) < 0.0);
}

#[test]
fn two_dimensional_maps_run() {
    for map in [
        ClassicalMap::baker(0.3).unwrap(),
        ClassicalMap::builtin("tinkerbell", 0.9).unwrap(),
    ] {
        let d = chaos_degree_of_map(&map, OrbitSettings { samples: 20_000, ..Default::default() }).unwrap();
        assert!(d > 0.1 && d <= (100.0f64 * 100.0).ln(), "{}: {d}", map.name());
    }
}
