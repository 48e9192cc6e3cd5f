use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::fmt;
use std::sync::Arc;

use crate::error::{EcdError, Result};

/// Points per axis when checking a map keeps its domain box invariant.
const VALIDATION_GRID: usize = 101;

type Rule = dyn Fn([f64; 2]) -> [f64; 2] + Send + Sync;

/// A discrete-time map `x_{t+1} = f(x_t)` on a box in R¹ or R².
///
/// One-dimensional states use the first slot of the `[f64; 2]` carrier.
#[derive(Clone)]
pub struct ClassicalMap {
    name: String,
    params: Vec<f64>,
    domain: Vec<(f64, f64)>,
    rule: Arc<Rule>,
    default_start: [f64; 2],
}

impl fmt::Debug for ClassicalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassicalMap")
            .field("name", &self.name)
            .field("params", &self.params)
            .field("domain", &self.domain)
            .finish()
    }
}

pub const BUILTIN_MAPS: [&str; 3] = ["logistic", "baker", "tinkerbell"];

/// Tinkerbell coefficients `(a, b, c, d)` with a well-known strange attractor.
pub const TINKERBELL_DEFAULT: [f64; 4] = [0.9, -0.6013, 2.0, 0.5];

impl ClassicalMap {
    /// Builds a map and checks on a grid of the box that it maps the box
    /// into itself.
    pub fn new<F>(
        name: impl Into<String>,
        params: Vec<f64>,
        domain: Vec<(f64, f64)>,
        default_start: [f64; 2],
        rule: F,
    ) -> Result<Self>
    where
        F: Fn([f64; 2]) -> [f64; 2] + Send + Sync + 'static,
    {
        let map = Self::unvalidated(name, params, domain, default_start, rule)?;
        let dim = map.dim();
        let ticks = |axis: usize| {
            let (lo, hi) = map.domain[axis];
            (0..VALIDATION_GRID).map(move |i| lo + (hi - lo) * i as f64 / (VALIDATION_GRID - 1) as f64)
        };
        let points: Vec<[f64; 2]> = if dim == 1 {
            ticks(0).map(|x| [x, 0.0]).collect()
        } else {
            ticks(0).flat_map(|x| ticks(1).map(move |y| [x, y])).collect()
        };
        for p in points {
            let q = (map.rule)(p);
            if !map.contains(&q) {
                return Err(EcdError::InvalidParameter(format!(
                    "map `{}` sends {:?} to {:?} outside its domain",
                    map.name,
                    &p[..dim],
                    &q[..dim]
                )));
            }
        }
        Ok(map)
    }

    fn unvalidated<F>(
        name: impl Into<String>,
        params: Vec<f64>,
        domain: Vec<(f64, f64)>,
        default_start: [f64; 2],
        rule: F,
    ) -> Result<Self>
    where
        F: Fn([f64; 2]) -> [f64; 2] + Send + Sync + 'static,
    {
        if !(1..=2).contains(&domain.len()) {
            return Err(EcdError::InvalidParameter(format!(
                "state dimension must be 1 or 2, got {}",
                domain.len()
            )));
        }
        if domain.iter().any(|&(lo, hi)| !(lo < hi) || !lo.is_finite() || !hi.is_finite()) {
            return Err(EcdError::InvalidParameter(format!("bad domain box {domain:?}")));
        }
        Ok(ClassicalMap {
            name: name.into(),
            params,
            domain,
            rule: Arc::new(rule),
            default_start,
        })
    }

    /// `x ↦ r x (1 − x)` on `[0, 1]`, `0 ≤ r ≤ 4`.
    pub fn logistic(r: f64) -> Result<Self> {
        if !(0.0..=4.0).contains(&r) {
            return Err(EcdError::InvalidParameter(format!(
                "logistic parameter r must lie in [0, 4], got {r}"
            )));
        }
        Self::new("logistic", vec![r], vec![(0.0, 1.0)], [0.3, 0.0], move |x| {
            [r * x[0] * (1.0 - x[0]), 0.0]
        })
    }

    /// Generalized baker's transformation of the unit square with cut `p`:
    /// the strip `x < p` is stretched onto the bottom `p` of the square and
    /// `x ≥ p` onto the top. `p = 0.5` is the symmetric map, whose
    /// floating-point orbits collapse onto 0 after ~50 steps because
    /// doubling shifts mantissa bits out.
    pub fn baker(p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(EcdError::InvalidParameter(format!(
                "baker cut p must lie in (0, 1), got {p}"
            )));
        }
        Self::new(
            "baker",
            vec![p],
            vec![(0.0, 1.0), (0.0, 1.0)],
            // away from rational cuts, where an orbit can land on 0 and stay
            [SQRT_2 - 1.0, FRAC_1_SQRT_2],
            move |[x, y]| {
                if x < p {
                    [(x / p).min(1.0), p * y]
                } else {
                    [((x - p) / (1.0 - p)).min(1.0), p + (1.0 - p) * y]
                }
            },
        )
    }

    /// `(x, y) ↦ (x² − y² + a x + b y, 2xy + c x + d y)` on the bounding box
    /// of the attractor for the default coefficients.
    ///
    /// The box is not forward-invariant as a whole, so instead of the grid
    /// check the orbit of the default start is required to stay inside.
    pub fn tinkerbell(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let map = Self::unvalidated(
            "tinkerbell",
            vec![a, b, c, d],
            vec![(-1.3, 0.5), (-1.6, 0.6)],
            [-0.72, -0.64],
            move |[x, y]| [x * x - y * y + a * x + b * y, 2.0 * x * y + c * x + d * y],
        )?;
        map.orbit_stays_inside(map.default_start, 10_000)?;
        Ok(map)
    }

    /// Looks up a built-in map by name with its swept parameter set:
    /// `r` for logistic, the cut `p` for baker, `a` for tinkerbell.
    pub fn builtin(name: &str, parameter: f64) -> Result<Self> {
        match name {
            "logistic" => Self::logistic(parameter),
            "baker" => Self::baker(parameter),
            "tinkerbell" => {
                let [_, b, c, d] = TINKERBELL_DEFAULT;
                Self::tinkerbell(parameter, b, c, d)
            }
            other => Err(EcdError::UnknownMap(other.to_string())),
        }
    }

    fn orbit_stays_inside(&self, start: [f64; 2], steps: usize) -> Result<()> {
        let mut x = start;
        for index in 1..=steps {
            x = (self.rule)(x);
            if !self.contains(&x) {
                return Err(EcdError::Divergence { index });
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.domain.len()
    }

    pub fn domain(&self) -> &[(f64, f64)] {
        &self.domain
    }

    pub fn default_start(&self) -> [f64; 2] {
        self.default_start
    }

    pub fn step(&self, x: [f64; 2]) -> [f64; 2] {
        (self.rule)(x)
    }

    pub fn contains(&self, x: &[f64; 2]) -> bool {
        self.domain
            .iter()
            .zip(x.iter())
            .all(|(&(lo, hi), &v)| v.is_finite() && v >= lo && v <= hi)
    }
}
