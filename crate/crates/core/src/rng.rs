//! Reproducible random streams and the scalar draws the samplers need.
//!
//! Every replication owns a private generator whose seed is a pure function
//! of `(master_seed, replication_index)`, so replications can run in any
//! order or on any number of threads and still produce identical output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

/// Generator used for all simulation streams.
pub type SimRng = ChaCha8Rng;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// One step of the SplitMix64 output function applied to `x`.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Identifies one replication's stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedSpec {
    pub master_seed: u64,
    pub replication_index: u64,
}

impl SeedSpec {
    pub fn new(master_seed: u64, replication_index: u64) -> Self {
        SeedSpec {
            master_seed,
            replication_index,
        }
    }

    /// `splitmix64(master ^ (GOLDEN * (index + 1)))`.
    pub fn child_seed(&self) -> u64 {
        let mix = GOLDEN.wrapping_mul(self.replication_index.wrapping_add(1));
        splitmix64(self.master_seed ^ mix)
    }

    pub fn rng(&self) -> SimRng {
        SimRng::seed_from_u64(self.child_seed())
    }

    /// Same replication index on an independent family of streams, keyed by
    /// `label`.
    pub fn substream(&self, label: Stream) -> SeedSpec {
        SeedSpec {
            master_seed: derive_master(self.master_seed, label),
            replication_index: self.replication_index,
        }
    }
}

/// Purpose tags separating the stream families of one experiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stream {
    Cloud,
    Limit,
    /// Extra key, e.g. the truncation order when streams should not couple.
    Keyed(u64),
}

/// Master seed for a stream family.
pub fn derive_master(master_seed: u64, label: Stream) -> u64 {
    let tag = match label {
        Stream::Cloud => 0x636c_6f75_6400_0000,
        Stream::Limit => 0x6c69_6d69_7400_0000,
        Stream::Keyed(k) => splitmix64(k ^ 0x6b65_7965_6400_0000),
    };
    splitmix64(master_seed ^ tag)
}

/// `U[0, 1)` draw.
pub fn uniform<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.random::<f64>()
}

/// Unit exponential by inversion, `−ln(1 − U)`.
pub fn exponential<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    -(1.0 - uniform(rng)).ln()
}

/// Poisson draw: sequential-search inversion below mean 30, transformed
/// rejection (PTRS) above.
pub fn poisson<R: Rng + ?Sized>(rng: &mut R, mean: f64) -> u64 {
    if mean.is_nan() || mean <= 0.0 {
        return 0;
    }
    if mean < 30.0 {
        poisson_inversion(rng, mean)
    } else {
        poisson_ptrs(rng, mean)
    }
}

fn poisson_inversion<R: Rng + ?Sized>(rng: &mut R, mean: f64) -> u64 {
    let u = uniform(rng);
    let mut k = 0u64;
    let mut p = (-mean).exp();
    let mut cdf = p;
    while u > cdf {
        k += 1;
        p *= mean / k as f64;
        cdf += p;
        if p == 0.0 && cdf < u {
            // Rounding left the cdf short of 1; u sits in the far tail.
            break;
        }
    }
    k
}

// Hörmann (1993), "The transformed rejection method for generating Poisson
// random variables".
fn poisson_ptrs<R: Rng + ?Sized>(rng: &mut R, mean: f64) -> u64 {
    let slam = mean.sqrt();
    let loglam = mean.ln();
    let b = 0.931 + 2.53 * slam;
    let a = -0.059 + 0.02483 * b;
    let inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    let vr = 0.9277 - 3.6224 / (b - 2.0);
    loop {
        let u = uniform(rng) - 0.5;
        let v = uniform(rng);
        let us = 0.5 - u.abs();
        let k = ((2.0 * a / us + b) * u + mean + 0.43).floor();
        if us >= 0.07 && v <= vr {
            return k as u64;
        }
        if k < 0.0 || (us < 0.013 && v > us) {
            continue;
        }
        let lhs = v.ln() + inv_alpha.ln() - (a / (us * us) + b).ln();
        let rhs = -mean + k * loglam - ln_gamma(k + 1.0);
        if lhs <= rhs {
            return k as u64;
        }
    }
}
