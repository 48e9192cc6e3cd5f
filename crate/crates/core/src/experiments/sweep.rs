use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::config::{ClassicalSweepConfig, SweepConfig};
use crate::channels::{baker_channel, BakerParams};
use crate::chaos::{chaos_degree_multi_step, classify, Classification, DecompositionMethod, ZERO_THRESHOLD};
use crate::classical::{build_histogram, classical_chaos_degree, iterate_orbit, ClassicalMap};
use crate::error::Result;
use crate::quantum::{BlochVector, DensityMatrix};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    /// Swept parameter value.
    pub a: f64,
    /// Chaos degree in nats.
    pub d: f64,
    /// Quantum sweeps record which decomposition entered `d`.
    pub method: Option<DecompositionMethod>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepMetadata {
    /// Axis label of the swept parameter.
    pub parameter: String,
    pub summary: String,
    pub wall_time: Duration,
    pub version: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    /// Strictly increasing in `a`.
    pub rows: Vec<SweepRow>,
    pub metadata: SweepMetadata,
}

impl SweepResult {
    pub fn values(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.d).collect()
    }

    /// Classification of the rows with `a` in `[lo, hi]`.
    pub fn classify_range(&self, lo: f64, hi: f64) -> Result<Classification> {
        let d: Vec<f64> = self
            .rows
            .iter()
            .filter(|r| r.a >= lo && r.a <= hi)
            .map(|r| r.d)
            .collect();
        classify(&d)
    }

    /// First parameter value whose degree exceeds the zero threshold.
    pub fn onset(&self) -> Option<f64> {
        self.rows.iter().find(|r| r.d >= ZERO_THRESHOLD).map(|r| r.a)
    }

    /// Number of rows computed through the degenerate infimum search.
    pub fn degenerate_rows(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.method == Some(DecompositionMethod::DegenerateSearch))
            .count()
    }
}

/// Multi-step chaos degree of the Baker channel at one parameter value.
pub fn quantum_point(a: f64, cfg: &SweepConfig) -> Result<SweepRow> {
    let channel = baker_channel(BakerParams::new(a)?)?;
    let initial = DensityMatrix::from_bloch(&BlochVector::from_array(cfg.initial)?);
    let r = chaos_degree_multi_step(&channel, &initial, cfg.steps, cfg.horizon)?;
    Ok(SweepRow {
        a,
        d: r.value,
        method: Some(r.method),
    })
}

/// Grid points are evaluated in parallel on the current rayon pool; rows
/// come back in grid order.
pub fn run_quantum_sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let started = Instant::now();
    let rows = cfg
        .grid()
        .into_par_iter()
        .map(|a| quantum_point(a, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult {
        rows,
        metadata: SweepMetadata {
            parameter: "a".into(),
            summary: format!("Baker channel, {}", cfg.summary()),
            wall_time: started.elapsed(),
            version: env!("CARGO_PKG_VERSION"),
        },
    })
}

pub fn classical_point(parameter: f64, cfg: &ClassicalSweepConfig) -> Result<SweepRow> {
    let map = ClassicalMap::builtin(&cfg.map, parameter)?;
    let start = cfg.start.unwrap_or_else(|| map.default_start());
    let orbit = iterate_orbit(&map, start, cfg.orbit.transient, cfg.orbit.samples)?;
    let histogram = build_histogram(&orbit, cfg.orbit.bins)?;
    Ok(SweepRow {
        a: parameter,
        d: classical_chaos_degree(&histogram),
        method: None,
    })
}

pub fn run_classical_sweep(cfg: &ClassicalSweepConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let started = Instant::now();
    let rows = cfg
        .grid()
        .into_par_iter()
        .map(|p| classical_point(p, cfg))
        .collect::<Result<Vec<_>>>()?;
    let parameter = match cfg.map.as_str() {
        "logistic" => "r",
        "baker" => "p",
        _ => "a",
    };
    Ok(SweepResult {
        rows,
        metadata: SweepMetadata {
            parameter: parameter.into(),
            summary: cfg.summary(),
            wall_time: started.elapsed(),
            version: env!("CARGO_PKG_VERSION"),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::EcdError;

    #[test]
    fn small_quantum_sweep_is_ordered() {
        let cfg = SweepConfig {
            a_count: 5,
            steps: 50,
            horizon: 10,
            ..SweepConfig::default()
        };
        let res = run_quantum_sweep(&cfg).unwrap();
        assert_eq!(res.rows.len(), 5);
        assert!(res.rows.windows(2).all(|w| w[0].a < w[1].a));
        assert!(res.rows.iter().all(|r| r.d >= 0.0));
        assert_eq!(res.metadata.parameter, "a");
    }

    #[test]
    fn invalid_config_names_field() {
        let cfg = SweepConfig {
            a_min: 0.0,
            a_max: 0.0,
            ..SweepConfig::default()
        };
        assert!(matches!(run_quantum_sweep(&cfg), Err(EcdError::Config { .. })));
    }

    #[test]
    fn unknown_classical_map() {
        let cfg = ClassicalSweepConfig {
            map: "lorenz".into(),
            ..Default::default()
        };
        assert!(matches!(run_classical_sweep(&cfg), Err(EcdError::UnknownMap(_))));
    }

    #[test]
    fn onset_and_ranges() {
        let meta = SweepMetadata {
            parameter: "a".into(),
            summary: String::new(),
            wall_time: Duration::ZERO,
            version: "test",
        };
        let rows = [(0.0, 0.0), (0.5, 0.0), (0.75, 0.2), (1.0, 0.4)]
            .map(|(a, d)| SweepRow { a, d, method: None })
            .to_vec();
        let res = SweepResult { rows, metadata: meta };
        assert_eq!(res.onset(), Some(0.75));
        assert_eq!(res.classify_range(0.0, 0.5).unwrap(), Classification::Stable);
        assert_eq!(res.classify_range(0.6, 1.0).unwrap(), Classification::Chaotic);
    }
}
