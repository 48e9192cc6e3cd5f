use std::fmt;

use crate::error::{EcdError, Result};

/// `|D|` below this counts as zero.
pub const ZERO_THRESHOLD: f64 = 1e-6;
/// Spread `max − min` below this counts as constant.
pub const CONSTANT_THRESHOLD: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Chaotic,
    WeakStable,
    Stable,
    /// A lone chaos-degree value carries no trajectory to classify.
    UnclassifiedSinglePoint,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Chaotic => "chaotic",
            Classification::WeakStable => "weak-stable",
            Classification::Stable => "stable",
            Classification::UnclassifiedSinglePoint => "unclassified-single-point",
        })
    }
}

/// Classifies a trajectory of chaos-degree values: all zero is stable, a
/// nonzero constant is weak-stable, anything else is chaotic.
pub fn classify(trajectory: &[f64]) -> Result<Classification> {
    if trajectory.len() < 2 {
        return Err(EcdError::InsufficientData(format!(
            "classification needs at least 2 values, got {}",
            trajectory.len()
        )));
    }
    if trajectory.iter().all(|d| d.abs() < ZERO_THRESHOLD) {
        return Ok(Classification::Stable);
    }
    let (lo, hi) = trajectory
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &d| {
            (lo.min(d), hi.max(d))
        });
    let mean = trajectory.iter().sum::<f64>() / trajectory.len() as f64;
    if hi - lo < CONSTANT_THRESHOLD && mean >= ZERO_THRESHOLD {
        Ok(Classification::WeakStable)
    } else {
        Ok(Classification::Chaotic)
    }
}
