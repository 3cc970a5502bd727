//! Sampler for the limiting law of `n^{2/3} (2a − diam)`.
//!
//! Each quadrant contributes a norm-angle sequence `(Z₁,ₖ, Z₂,ₖ)`: with
//! `Sₖ = Y₁ + … + Yₖ` a sum of unit exponentials and `Uₖ` independent
//! uniforms,
//!
//! ```text
//! Z₁,ₖ = σ Sₖ^{2/3},    Z₂,ₖ = Uₖ τ √Z₁,ₖ .
//! ```
//!
//! Two quadrants on opposite poles combine into
//! `min_{k,l} Z₁,ₖ + Z₁,ₗ + (a/4)(Z₂,ₖ ∓ Z₂,ₗ)²` (difference for diagonally
//! opposite quadrants, sum for quadrants on the same side of the major
//! axis), and the limit is the smallest of the four cross-pole minima.
//! Truncating every sequence at `m` terms gives the approximation sampled
//! here.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Quadrant, Separation};
use crate::region::{QuadrantConstants, Region};
use crate::rng;
use crate::sampling::CROSS_PAIRS;

/// Default truncation order.
pub const DEFAULT_TRUNCATION: usize = 8;

/// First `m` terms of a norm-angle sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormAngleSample {
    pub sigma: f64,
    pub tau: f64,
    /// Scaled norm deficiencies, strictly increasing.
    pub z1: Vec<f64>,
    /// Scaled folded angles, `0 ≤ z2[k] ≤ τ √z1[k]`.
    pub z2: Vec<f64>,
}

fn check_params(sigma: f64, tau: f64, m: usize) -> Result<()> {
    let ok = sigma > 0.0 && sigma.is_finite() && tau > 0.0 && tau.is_finite() && m >= 1;
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidNaParameters { sigma, tau, m })
    }
}

impl NormAngleSample {
    /// Builds the sequence from given exponential increments `ys` and
    /// uniforms `us` (same length).
    pub fn from_draws(sigma: f64, tau: f64, ys: &[f64], us: &[f64]) -> Result<Self> {
        check_params(sigma, tau, ys.len())?;
        if ys.len() != us.len() {
            return Err(Error::TruncationMismatch(ys.len(), us.len()));
        }
        let mut s = 0.0;
        let mut z1 = Vec::with_capacity(ys.len());
        let mut z2 = Vec::with_capacity(ys.len());
        for (&y, &u) in ys.iter().zip(us) {
            s += y;
            let norm = sigma * s.powf(2.0 / 3.0);
            z1.push(norm);
            z2.push(u * tau * norm.sqrt());
        }
        Ok(NormAngleSample { sigma, tau, z1, z2 })
    }

    /// Truncation order.
    pub fn m(&self) -> usize {
        self.z1.len()
    }

    /// First `m` terms (all of them if `m` exceeds the length).
    pub fn truncated(&self, m: usize) -> NormAngleSample {
        let m = m.min(self.m());
        NormAngleSample {
            sigma: self.sigma,
            tau: self.tau,
            z1: self.z1[..m].to_vec(),
            z2: self.z2[..m].to_vec(),
        }
    }
}

/// Draws a norm-angle sequence of length `m`.
pub fn sample_norm_angle<R: Rng + ?Sized>(
    sigma: f64,
    tau: f64,
    m: usize,
    rng: &mut R,
) -> Result<NormAngleSample> {
    check_params(sigma, tau, m)?;
    let mut ys = Vec::with_capacity(m);
    let mut us = Vec::with_capacity(m);
    for _ in 0..m {
        ys.push(rng::exponential(rng));
        us.push(rng::uniform(rng));
    }
    NormAngleSample::from_draws(sigma, tau, &ys, &us)
}

/// Minimum of a cross-pole functional with its attaining 0-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossMin {
    pub value: f64,
    pub k: usize,
    pub l: usize,
}

/// `min_{k,l} z1ᵢ[k] + z1ⱼ[l] + (a/4)(z2ᵢ[k] ∓ z2ⱼ[l])²`, by full
/// enumeration. Ties resolve to the lexicographically smallest `(k, l)`.
pub fn s_cross(
    na_i: &NormAngleSample,
    na_j: &NormAngleSample,
    a: f64,
    mode: Separation,
) -> Result<CrossMin> {
    if na_i.m() != na_j.m() {
        return Err(Error::TruncationMismatch(na_i.m(), na_j.m()));
    }
    let mut best = CrossMin {
        value: f64::INFINITY,
        k: 0,
        l: 0,
    };
    for k in 0..na_i.m() {
        for l in 0..na_j.m() {
            let e = mode.combine(na_i.z2[k], na_j.z2[l]);
            let v = na_i.z1[k] + na_j.z1[l] + 0.25 * a * e * e;
            if v < best.value {
                best = CrossMin { value: v, k, l };
            }
        }
    }
    Ok(best)
}

/// One draw of the (truncated) limit law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LimitSample {
    pub value: f64,
    pub pair: (Quadrant, Quadrant),
    /// Attaining 0-based positions within the two sequences.
    pub indices: (usize, usize),
}

/// Minimum over the four cross-pole pairs `(1,2), (1,3), (2,4), (3,4)` of
/// the norm-angle sequences `na` (indexed by quadrant).
pub fn limit_from_sequences(na: &[NormAngleSample; 4], a: f64) -> Result<LimitSample> {
    let mut best: Option<LimitSample> = None;
    for &(qi, qj) in &CROSS_PAIRS {
        let mode = Separation::between(qi, qj).expect("cross-pole pair");
        let cm = s_cross(&na[qi.slot()], &na[qj.slot()], a, mode)?;
        if best.is_none_or(|b| cm.value < b.value) {
            best = Some(LimitSample {
                value: cm.value,
                pair: (qi, qj),
                indices: (cm.k, cm.l),
            });
        }
    }
    Ok(best.expect("four pairs"))
}

/// Draws four independent norm-angle sequences of length `m`, one per
/// quadrant. Draws are interleaved by position (for each `k`, quadrants 1
/// to 4 take `(Y, U)` in turn), so a longer truncation on the same stream
/// extends a shorter one.
pub fn sample_sequences<R: Rng + ?Sized>(
    constants: &[QuadrantConstants; 4],
    m: usize,
    rng: &mut R,
) -> Result<[NormAngleSample; 4]> {
    for k in constants {
        check_params(k.sigma, k.tau, m)?;
    }
    let mut ys = [(); 4].map(|_| Vec::with_capacity(m));
    let mut us = [(); 4].map(|_| Vec::with_capacity(m));
    for _ in 0..m {
        for q in 0..4 {
            ys[q].push(rng::exponential(rng));
            us[q].push(rng::uniform(rng));
        }
    }
    let build = |q: usize| {
        NormAngleSample::from_draws(constants[q].sigma, constants[q].tau, &ys[q], &us[q])
    };
    Ok([build(0)?, build(1)?, build(2)?, build(3)?])
}

/// One draw from the limit law of `region`, truncated at `m`.
pub fn sample_limit<R: Rng + ?Sized>(
    region: &Region,
    m: usize,
    rng: &mut R,
) -> Result<LimitSample> {
    let constants = region.all_constants()?;
    let na = sample_sequences(&constants, m, rng)?;
    limit_from_sequences(&na, region.a())
}
