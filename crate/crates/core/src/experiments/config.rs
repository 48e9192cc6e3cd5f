//! Sweep configuration and the flat `key = value` config-file format.
//!
//! ```text
//! # desk-scale Baker sweep
//! a-min = 0
//! a-max = 1
//! a-count = 74
//! x0 = 0.3, 0.3, 0.3
//! ```

use std::path::{Path, PathBuf};

use crate::classical::{OrbitSettings, BUILTIN_MAPS};
use crate::error::{EcdError, Result};
use crate::quantum::BlochVector;

/// Every key the config format understands.
pub const CONFIG_KEYS: [&str; 14] = [
    "a-min", "a-max", "a-count", "n", "m", "x0", "bins", "transient", "samples", "out-csv",
    "out-svg", "seed", "map", "threads",
];

/// Ordered `key = value` pairs read from a config file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfigFile {
    pub entries: Vec<(String, String)>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(EcdError::config(
                    &format!("line {}", lineno + 1),
                    format!("expected `key = value`, got `{line}`"),
                ));
            };
            let key = key.trim();
            if !CONFIG_KEYS.contains(&key) {
                return Err(EcdError::config(key, "unknown key"));
            }
            entries.push((key.to_string(), value.trim().to_string()));
        }
        Ok(ConfigFile { entries })
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| EcdError::config(key, format!("cannot parse `{value}`")))
}

/// Comma-separated list of reals.
pub fn parse_vector(key: &str, value: &str) -> Result<Vec<f64>> {
    value.split(',').map(|s| parse_num(key, s.trim())).collect()
}

/// Uniform grid of `count` points including both endpoints.
pub fn uniform_grid(min: f64, max: f64, count: usize) -> Vec<f64> {
    let span = max - min;
    (0..count)
        .map(|i| {
            if i + 1 == count {
                max
            } else {
                min + span * i as f64 / (count - 1) as f64
            }
        })
        .collect()
}

fn check_range(min: f64, max: f64, count: usize) -> Result<()> {
    if !min.is_finite() || !max.is_finite() {
        return Err(EcdError::config("a-min", "range endpoints must be finite"));
    }
    if !(min < max) {
        return Err(EcdError::config(
            "a-min",
            format!("a-min ({min}) must be below a-max ({max})"),
        ));
    }
    if count < 2 {
        return Err(EcdError::config("a-count", format!("need at least 2 points, got {count}")));
    }
    Ok(())
}

/// Baker-channel sweep over the stretching parameter `a`.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub a_min: f64,
    pub a_max: f64,
    pub a_count: usize,
    /// Steps `n` before the state is decomposed.
    pub steps: usize,
    /// Horizon `m` of the tensor-product channel.
    pub horizon: usize,
    pub initial: [f64; 3],
    pub seed: u64,
    pub out_csv: Option<PathBuf>,
    pub out_svg: Option<PathBuf>,
}

impl Default for SweepConfig {
    /// Desk scale: 74 points, `n = 500`, `m = 100`.
    fn default() -> Self {
        SweepConfig {
            a_min: 0.0,
            a_max: 1.0,
            a_count: 74,
            steps: 500,
            horizon: 100,
            initial: [0.3, 0.3, 0.3],
            seed: 0,
            out_csv: None,
            out_svg: None,
        }
    }
}

impl SweepConfig {
    /// 740 points, `n = 2000`, `m = 1000`.
    pub fn full_scale() -> Self {
        SweepConfig {
            a_count: 740,
            steps: 2000,
            horizon: 1000,
            ..Self::default()
        }
    }

    /// Applies one config entry. Keys that only concern classical sweeps
    /// are accepted and ignored; returns whether the key was used.
    pub fn set(&mut self, key: &str, value: &str) -> Result<bool> {
        match key {
            "a-min" => self.a_min = parse_num(key, value)?,
            "a-max" => self.a_max = parse_num(key, value)?,
            "a-count" => self.a_count = parse_num(key, value)?,
            "n" => self.steps = parse_num(key, value)?,
            "m" => self.horizon = parse_num(key, value)?,
            "seed" => self.seed = parse_num(key, value)?,
            "out-csv" => self.out_csv = Some(PathBuf::from(value)),
            "out-svg" => self.out_svg = Some(PathBuf::from(value)),
            "x0" => {
                let v = parse_vector(key, value)?;
                self.initial = v
                    .try_into()
                    .map_err(|_| EcdError::config(key, "expected three components"))?;
            }
            k if CONFIG_KEYS.contains(&k) => return Ok(false),
            k => return Err(EcdError::config(k, "unknown key")),
        }
        Ok(true)
    }

    pub fn apply_file(&mut self, file: &ConfigFile) -> Result<()> {
        for (k, v) in &file.entries {
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        check_range(self.a_min, self.a_max, self.a_count)?;
        if self.a_min < 0.0 || self.a_max > 1.0 {
            return Err(EcdError::config("a-min", "the Baker parameter range must lie in [0, 1]"));
        }
        if self.steps < 1 {
            return Err(EcdError::config("n", "step count must be at least 1"));
        }
        if self.horizon < 1 {
            return Err(EcdError::config("m", "horizon must be at least 1"));
        }
        BlochVector::from_array(self.initial)
            .map_err(|e| EcdError::config("x0", e.to_string()))?;
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        uniform_grid(self.a_min, self.a_max, self.a_count)
    }

    pub fn summary(&self) -> String {
        let [x1, x2, x3] = self.initial;
        format!(
            "a in [{}, {}] ({} points), n = {}, m = {}, X0 = ({x1}, {x2}, {x3})",
            self.a_min, self.a_max, self.a_count, self.steps, self.horizon
        )
    }
}

/// Sweep of a built-in classical map over its main parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalSweepConfig {
    pub map: String,
    pub param_min: f64,
    pub param_max: f64,
    pub param_count: usize,
    pub orbit: OrbitSettings,
    /// Defaults to the map's own start point.
    pub start: Option<[f64; 2]>,
    pub out_csv: Option<PathBuf>,
    pub out_svg: Option<PathBuf>,
}

impl Default for ClassicalSweepConfig {
    fn default() -> Self {
        ClassicalSweepConfig {
            map: "logistic".into(),
            param_min: 3.0,
            param_max: 4.0,
            param_count: 200,
            orbit: OrbitSettings::default(),
            start: None,
            out_csv: None,
            out_svg: None,
        }
    }
}

impl ClassicalSweepConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<bool> {
        match key {
            "map" => self.map = value.to_string(),
            "a-min" => self.param_min = parse_num(key, value)?,
            "a-max" => self.param_max = parse_num(key, value)?,
            "a-count" => self.param_count = parse_num(key, value)?,
            "bins" => self.orbit.bins = parse_num(key, value)?,
            "transient" => self.orbit.transient = parse_num(key, value)?,
            "samples" => self.orbit.samples = parse_num(key, value)?,
            "out-csv" => self.out_csv = Some(PathBuf::from(value)),
            "out-svg" => self.out_svg = Some(PathBuf::from(value)),
            "x0" => {
                let v = parse_vector(key, value)?;
                self.start = Some(match v.as_slice() {
                    [x] => [*x, 0.0],
                    [x, y] => [*x, *y],
                    _ => return Err(EcdError::config(key, "expected one or two components")),
                });
            }
            k if CONFIG_KEYS.contains(&k) => return Ok(false),
            k => return Err(EcdError::config(k, "unknown key")),
        }
        Ok(true)
    }

    pub fn apply_file(&mut self, file: &ConfigFile) -> Result<()> {
        for (k, v) in &file.entries {
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if !BUILTIN_MAPS.contains(&self.map.as_str()) {
            return Err(EcdError::UnknownMap(self.map.clone()));
        }
        check_range(self.param_min, self.param_max, self.param_count)?;
        if self.orbit.bins < 2 {
            return Err(EcdError::config("bins", "need at least 2 bins per axis"));
        }
        if self.orbit.samples < 2 {
            return Err(EcdError::config("samples", "need at least 2 samples"));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        uniform_grid(self.param_min, self.param_max, self.param_count)
    }

    pub fn summary(&self) -> String {
        format!(
            "{} over [{}, {}] ({} points), B = {}, transient = {}, T = {}",
            self.map,
            self.param_min,
            self.param_max,
            self.param_count,
            self.orbit.bins,
            self.orbit.transient,
            self.orbit.samples
        )
    }
}
