//! Finite-partition estimate of an orbit's distribution and of its
//! one-step transition law.

use super::Orbit;
use crate::error::{EcdError, Result};
use crate::quantum::shannon_entropy;

#[derive(Clone, Debug, PartialEq)]
pub struct TransitionHistogram {
    bins_per_axis: usize,
    dim: usize,
    /// Occupation count of each visited cell, sorted by cell index.
    occupation: Vec<(usize, u64)>,
    /// `(from, to, count)` sorted by `(from, to)`.
    transitions: Vec<(usize, usize, u64)>,
    sample_size: u64,
}

impl TransitionHistogram {
    pub fn bins_per_axis(&self) -> usize {
        self.bins_per_axis
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cell_count(&self) -> usize {
        self.bins_per_axis.pow(self.dim as u32)
    }

    pub fn occupation(&self) -> &[(usize, u64)] {
        &self.occupation
    }

    pub fn transitions(&self) -> &[(usize, usize, u64)] {
        &self.transitions
    }

    pub fn sample_size(&self) -> u64 {
        self.sample_size
    }

    /// Empirical probabilities `N_i / T` of the occupied cells.
    pub fn probabilities(&self) -> Vec<(usize, f64)> {
        let t = self.sample_size as f64;
        self.occupation.iter().map(|&(i, n)| (i, n as f64 / t)).collect()
    }

    /// Rows of the conditional law `p(· | i)`, one per cell with at least
    /// one outgoing transition.
    pub fn conditional_rows(&self) -> Vec<(usize, Vec<f64>)> {
        let mut rows = Vec::new();
        let mut start = 0;
        while start < self.transitions.len() {
            let from = self.transitions[start].0;
            let end = start
                + self.transitions[start..]
                    .iter()
                    .take_while(|t| t.0 == from)
                    .count();
            let total: u64 = self.transitions[start..end].iter().map(|t| t.2).sum();
            let row = self.transitions[start..end]
                .iter()
                .map(|t| t.2 as f64 / total as f64)
                .collect();
            rows.push((from, row));
            start = end;
        }
        rows
    }

    /// Relabels cells by `perm[old] = new`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let mut occupation: Vec<_> = self.occupation.iter().map(|&(i, n)| (perm[i], n)).collect();
        occupation.sort_unstable();
        let mut transitions: Vec<_> = self
            .transitions
            .iter()
            .map(|&(i, j, n)| (perm[i], perm[j], n))
            .collect();
        transitions.sort_unstable();
        TransitionHistogram {
            occupation,
            transitions,
            ..self.clone()
        }
    }
}

/// Equal-width bin of `x` in `[lo, hi]`; bins are half-open except the top.
fn bin_index(x: f64, lo: f64, hi: f64, bins: usize) -> usize {
    let t = (x - lo) / (hi - lo) * bins as f64;
    (t.floor().max(0.0) as usize).min(bins - 1)
}

pub fn build_histogram(orbit: &Orbit, bins_per_axis: usize) -> Result<TransitionHistogram> {
    if bins_per_axis < 2 {
        return Err(EcdError::InvalidParameter(format!(
            "need at least 2 bins per axis, got {bins_per_axis}"
        )));
    }
    if orbit.points.len() < 2 {
        return Err(EcdError::InsufficientData(format!(
            "orbit has {} points, need at least 2",
            orbit.points.len()
        )));
    }
    let dim = orbit.domain.len();
    let cells: Vec<usize> = orbit
        .points
        .iter()
        .map(|p| {
            orbit
                .domain
                .iter()
                .enumerate()
                .rev()
                .fold(0, |acc, (axis, &(lo, hi))| {
                    acc * bins_per_axis + bin_index(p[axis], lo, hi, bins_per_axis)
                })
        })
        .collect();

    let mut sorted = cells.clone();
    sorted.sort_unstable();
    let mut occupation: Vec<(usize, u64)> = Vec::new();
    for c in sorted {
        match occupation.last_mut() {
            Some((last, n)) if *last == c => *n += 1,
            _ => occupation.push((c, 1)),
        }
    }

    let mut pairs: Vec<(usize, usize)> = cells.windows(2).map(|w| (w[0], w[1])).collect();
    pairs.sort_unstable();
    let mut transitions: Vec<(usize, usize, u64)> = Vec::new();
    for (i, j) in pairs {
        match transitions.last_mut() {
            Some((a, b, n)) if *a == i && *b == j => *n += 1,
            _ => transitions.push((i, j, 1)),
        }
    }

    Ok(TransitionHistogram {
        bins_per_axis,
        dim,
        occupation,
        transitions,
        sample_size: orbit.points.len() as u64,
    })
}

/// `D_c = Σ_i p_i S(p(·|i))` in nats.
///
/// The conditional law of a cell is normalized by its outgoing transitions;
/// the final orbit point has none and only enters through `p_i`.
pub fn classical_chaos_degree(histogram: &TransitionHistogram) -> f64 {
    let probs = histogram.probabilities();
    let rows = histogram.conditional_rows();
    let mut total = 0.0;
    let mut r = 0;
    for (cell, p) in probs {
        while r < rows.len() && rows[r].0 < cell {
            r += 1;
        }
        if r < rows.len() && rows[r].0 == cell {
            total += p * shannon_entropy(&rows[r].1);
        }
    }
    total.max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbit_1d(xs: &[f64]) -> Orbit {
        Orbit {
            domain: vec![(0.0, 1.0)],
            points: xs.iter().map(|&x| [x, 0.0]).collect(),
        }
    }

    #[test]
    fn constant_orbit() {
        let h = build_histogram(&orbit_1d(&[0.3; 50]), 10).unwrap();
        assert_eq!(h.occupation(), &[(3, 50)]);
        assert_eq!(h.transitions(), &[(3, 3, 49)]);
        assert_eq!(classical_chaos_degree(&h), 0.0);
    }

    #[test]
    fn period_two_orbit() {
        let xs: Vec<f64> = (0..20).map(|i| if i % 2 == 0 { 0.2 } else { 0.8 }).collect();
        let h = build_histogram(&orbit_1d(&xs), 10).unwrap();
        assert_eq!(h.occupation(), &[(2, 10), (8, 10)]);
        assert_eq!(h.transitions(), &[(2, 8, 10), (8, 2, 9)]);
        assert_eq!(classical_chaos_degree(&h), 0.0);
    }

    #[test]
    fn boundary_assignment() {
        assert_eq!(bin_index(0.0, 0.0, 1.0, 4), 0);
        assert_eq!(bin_index(0.25, 0.0, 1.0, 4), 1);
        assert_eq!(bin_index(1.0, 0.0, 1.0, 4), 3);
    }

    #[test]
    fn two_dimensional_cells() {
        let orbit = Orbit {
            domain: vec![(0.0, 1.0), (0.0, 1.0)],
            points: vec![[0.05, 0.95], [0.95, 0.05]],
        };
        let h = build_histogram(&orbit, 10).unwrap();
        assert_eq!(h.cell_count(), 100);
        // cell = ix + B·iy
        assert_eq!(h.occupation(), &[(9, 1), (90, 1)]);
    }

    #[test]
    fn uniform_branching_gives_log_two() {
        // cell 0 → {0, 1} evenly; cell 1 → 0
        let xs = [0.1, 0.1, 0.9, 0.1, 0.1, 0.9, 0.1, 0.1, 0.9, 0.1];
        let h = build_histogram(&orbit_1d(&xs), 2).unwrap();
        let p0 = 7.0 / 10.0;
        // from cell 0: 6 transitions, 3 to cell 0 and 3 to cell 1
        let expect = p0 * std::f64::consts::LN_2;
        assert!((classical_chaos_degree(&h) - expect).abs() < 1e-15);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            build_histogram(&orbit_1d(&[0.5]), 10),
            Err(EcdError::InsufficientData(_))
        ));
        assert!(build_histogram(&orbit_1d(&[]), 10).is_err());
        assert!(build_histogram(&orbit_1d(&[0.1, 0.2]), 1).is_err());
    }
}
