//! Empirical distribution functions and the two-sample Kolmogorov–Smirnov
//! distance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Right-continuous empirical CDF of a finite sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalCdf {
    values: Vec<f64>,
}

impl EmpiricalCdf {
    pub fn new(samples: impl IntoIterator<Item = f64>) -> Result<Self> {
        let mut values: Vec<f64> = samples.into_iter().collect();
        if values.is_empty() {
            return Err(Error::EmptySample);
        }
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::InvalidConfig("sample contains NaN".into()));
        }
        values.sort_by(f64::total_cmp);
        Ok(EmpiricalCdf { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sorted sample values.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Fraction of samples `≤ t`.
    pub fn eval(&self, t: f64) -> f64 {
        self.values.partition_point(|&v| v <= t) as f64 / self.len() as f64
    }

    /// Order statistic number `ceil(p · n)` (1-based), for `p ∈ (0, 1)`.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::InvalidProbability(p));
        }
        let n = self.len();
        let rank = ((p * n as f64).ceil() as usize).clamp(1, n);
        Ok(self.values[rank - 1])
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.len() - 1]
    }
}

/// `sup_t |F₁(t) − F₂(t)|`, evaluated exactly at the merged jump points.
pub fn ks_distance(e1: &EmpiricalCdf, e2: &EmpiricalCdf) -> f64 {
    let (x, y) = (e1.values(), e2.values());
    let (n1, n2) = (x.len() as f64, y.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < x.len() || j < y.len() {
        let t = match (x.get(i), y.get(j)) {
            (Some(&a), Some(&b)) => a.min(b),
            (Some(&a), None) => a,
            (None, Some(&b)) => b,
            (None, None) => unreachable!(),
        };
        while i < x.len() && x[i] <= t {
            i += 1;
        }
        while j < y.len() && y[j] <= t {
            j += 1;
        }
        d = d.max((i as f64 / n1 - j as f64 / n2).abs());
    }
    d
}

/// `count` equally spaced points from `lo` to `hi` inclusive.
pub fn linear_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..count)
            .map(|k| lo + (hi - lo) * k as f64 / (count - 1) as f64)
            .collect(),
    }
}
