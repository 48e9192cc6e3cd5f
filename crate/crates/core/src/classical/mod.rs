//! Classical entropic chaos degree of an iterated map, estimated from a
//! long orbit on an equal-width partition of the map's domain.

mod histogram;
mod maps;

pub use histogram::{build_histogram, classical_chaos_degree, TransitionHistogram};
pub use maps::{ClassicalMap, BUILTIN_MAPS, TINKERBELL_DEFAULT};

use crate::error::{EcdError, Result};

/// Default partition resolution per axis.
pub const DEFAULT_BINS: usize = 100;
pub const DEFAULT_TRANSIENT: usize = 1_000;
pub const DEFAULT_SAMPLES: usize = 100_000;

/// Sampled iterates of a map together with the box they live in.
#[derive(Clone, Debug, PartialEq)]
pub struct Orbit {
    pub domain: Vec<(f64, f64)>,
    /// Unused trailing coordinates of 1-D maps are zero.
    pub points: Vec<[f64; 2]>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Discards `transient` iterates of `start`, then records the next `samples`.
pub fn iterate_orbit(
    map: &ClassicalMap,
    start: [f64; 2],
    transient: usize,
    samples: usize,
) -> Result<Orbit> {
    if !map.contains(&start) {
        return Err(EcdError::InvalidParameter(format!(
            "start {:?} lies outside the domain of `{}`",
            &start[..map.dim()],
            map.name()
        )));
    }
    let mut x = start;
    let mut points = Vec::with_capacity(samples);
    for index in 1..=transient + samples {
        x = map.step(x);
        if !map.contains(&x) {
            return Err(EcdError::Divergence { index });
        }
        if index > transient {
            points.push(x);
        }
    }
    Ok(Orbit {
        domain: map.domain().to_vec(),
        points,
    })
}

/// Orbit settings for one classical chaos-degree estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitSettings {
    pub bins: usize,
    pub transient: usize,
    pub samples: usize,
}

impl Default for OrbitSettings {
    fn default() -> Self {
        OrbitSettings {
            bins: DEFAULT_BINS,
            transient: DEFAULT_TRANSIENT,
            samples: DEFAULT_SAMPLES,
        }
    }
}

/// Orbit, histogram and `D_c` in one call, starting from the map's default
/// initial point.
pub fn chaos_degree_of_map(map: &ClassicalMap, settings: OrbitSettings) -> Result<f64> {
    let orbit = iterate_orbit(map, map.default_start(), settings.transient, settings.samples)?;
    let histogram = build_histogram(&orbit, settings.bins)?;
    Ok(classical_chaos_degree(&histogram))
}
