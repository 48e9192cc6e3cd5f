//! Baker's-type map of the Bloch ball.
//!
//! The map stretches the first coordinate by `2a`, compresses the second by
//! `a/2`, and annihilates the third. Coordinates with `|x_i| ≥ 1/√2`
//! (i = 1, 2) are first replaced by zero so both affine branches act on the
//! square `[−1/√2, 1/√2]²`.

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

use super::Channel;
use crate::error::{EcdError, Result};
use crate::quantum::{BlochVector, NORM_TOLERANCE};

/// Half-width of the square the two branches act on.
pub const BRANCH_EDGE: f64 = FRAC_1_SQRT_2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BakerParams {
    a: f64,
}

impl BakerParams {
    pub fn new(a: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) {
            return Err(EcdError::InvalidParameter(format!(
                "Baker parameter a must lie in [0, 1], got {a}"
            )));
        }
        Ok(BakerParams { a })
    }

    pub fn a(&self) -> f64 {
        self.a
    }
}

/// Coordinates beyond the branch square are reset to zero. A coordinate
/// within `NORM_TOLERANCE` of the edge counts as on the edge and is kept,
/// so the corner `(−1/√2, −1/√2, 0)` survives rounding in normalization.
fn clamp(x: f64) -> f64 {
    if x.abs() > BRANCH_EDGE + NORM_TOLERANCE {
        0.0
    } else {
        x
    }
}

pub(crate) fn baker_step(x: [f64; 3], a: f64) -> [f64; 3] {
    let x1 = clamp(x[0]);
    let x2 = clamp(x[1]);
    let c = BRANCH_EDGE;
    if x1 < 0.0 {
        [
            2.0 * a * (x1 + c) - c,
            0.5 * a * (x2 + c) - c,
            0.0,
        ]
    } else {
        [
            2.0 * a * (x1 + c) - SQRT_2 * a - c,
            0.5 * a * (x2 + c) + a * c - c,
            0.0,
        ]
    }
}

pub fn baker_map(x: &BlochVector, params: BakerParams) -> BlochVector {
    // Both branches land in [−1/√2, 1/√2]² × {0}, inside the ball.
    BlochVector::from_array_unchecked(baker_step(x.components(), params.a))
}

pub fn baker_channel(params: BakerParams) -> Result<Channel> {
    let a = params.a;
    Channel::bloch_map(format!("baker(a={a})"), move |x| baker_step(x, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::bloch_to_density;

    fn p(a: f64) -> BakerParams {
        BakerParams::new(a).unwrap()
    }

    #[test]
    fn corner_is_fixed() {
        let corner = BlochVector::new(-BRANCH_EDGE, -BRANCH_EDGE, 0.0).unwrap();
        for a in [0.0, 0.3, 0.5, 0.77, 1.0] {
            let y = baker_map(&corner, p(a));
            assert!(y.distance(&corner) < 1e-15, "a={a}: {y}");
        }
    }

    #[test]
    fn second_branch_point() {
        // independent scalar evaluation of the x1 ≥ 0 branch
        let s = 0.5f64.sqrt();
        let a = 0.5;
        let y1 = 2.0 * a * (0.3 + s) - 2.0f64.sqrt() * a - s;
        let y2 = 0.5 * a * (0.3 + s) + a / 2.0f64.sqrt() - s;
        let y = baker_map(&BlochVector::new(0.3, 0.3, 0.3).unwrap(), p(a));
        assert!((y.x1() - y1).abs() < 1e-15);
        assert!((y.x2() - y2).abs() < 1e-15);
        assert!((y.x1() - -0.4071068).abs() < 1e-7);
        assert!((y.x2() - -0.1017767).abs() < 1e-7);
        assert_eq!(y.x3(), 0.0);
    }

    #[test]
    fn clamp_resets_large_first_coordinate() {
        for a in [0.1, 0.6, 1.0] {
            let clamped = baker_map(&BlochVector::new(0.8, 0.3, 0.0).unwrap(), p(a));
            let direct = baker_map(&BlochVector::new(0.0, 0.3, 0.0).unwrap(), p(a));
            assert_eq!(clamped, direct);
        }
        let x = baker_map(&BlochVector::new(-0.1, -0.9, 0.2).unwrap(), p(0.4));
        let y = baker_map(&BlochVector::new(-0.1, 0.0, 0.2).unwrap(), p(0.4));
        assert_eq!(x, y);
    }

    #[test]
    fn zero_sits_on_second_branch() {
        let y = baker_map(&BlochVector::ORIGIN, p(1.0));
        // 2a·c − √2a − c = −c for a = 1
        assert!((y.x1() + BRANCH_EDGE).abs() < 1e-15);
    }

    #[test]
    fn rejects_out_of_range_parameter() {
        assert!(BakerParams::new(-0.01).is_err());
        assert!(BakerParams::new(1.01).is_err());
        assert!(BakerParams::new(f64::NAN).is_err());
    }

    #[test]
    fn channel_on_pure_x_state() {
        // (1,0,0): clamp x1 → 0, then f₂ at (0,0,0)
        let ch = baker_channel(p(0.5)).unwrap();
        let out = ch
            .apply(&bloch_to_density(&BlochVector::new(1.0, 0.0, 0.0).unwrap()))
            .unwrap()
            .to_bloch();
        let s = 0.5f64.sqrt();
        let expect = [-s, 0.25 * s + 0.5 * s - s, 0.0];
        for (got, want) in out.components().iter().zip(expect) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn zero_stretch_collapses_orbits() {
        let ch = baker_channel(p(0.0)).unwrap();
        let starts = [[0.2, -0.5, 0.1], [-0.3, 0.4, -0.7], [0.0, 0.0, 0.9]];
        for s in starts {
            let rho = bloch_to_density(&BlochVector::from_array(s).unwrap());
            let y = ch.apply(&rho).unwrap().to_bloch();
            assert!(y.distance(&BlochVector::new(-BRANCH_EDGE, -BRANCH_EDGE, 0.0).unwrap()) < 1e-15);
        }
    }
}
