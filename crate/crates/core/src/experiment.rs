//! Replicated experiments comparing the scaled diameter deficiency of finite
//! clouds with draws from the truncated limit law.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limit;
use crate::region::Region;
use crate::rng::{derive_master, SeedSpec, Stream};
use crate::sampling::{self, Regime};
use crate::stats::{self, EmpiricalCdf};

/// Number of evaluation points in the exported ECDF table.
pub const GRID_POINTS: usize = 512;
/// Pooled quantile at which the ECDF table stops.
pub const GRID_UPPER_QUANTILE: f64 = 0.999;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RegionConfig {
    Ellipse { a: f64, b: f64 },
    QuarterEllipse { a: f64, b: [f64; 4] },
}

impl RegionConfig {
    pub fn build(&self) -> Result<Region> {
        match *self {
            RegionConfig::Ellipse { a, b } => Region::ellipse(a, b),
            RegionConfig::QuarterEllipse { a, b } => Region::quarter_ellipse(a, b),
        }
    }

    pub fn a(&self) -> f64 {
        match *self {
            RegionConfig::Ellipse { a, .. } | RegionConfig::QuarterEllipse { a, .. } => a,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub region: RegionConfig,
    /// Nominal sample size (intensity in the Poissonized regime).
    pub n: usize,
    pub reps: usize,
    /// Truncation order of the limit sampler.
    pub m: usize,
    pub regime: Regime,
    pub seed: u64,
}

impl ExperimentConfig {
    /// Ellipse `a = 1, b = 1/2`, `n = 1000`, 5000 replications, `m = 8`,
    /// fixed `n`.
    pub fn reference() -> Self {
        ExperimentConfig {
            region: RegionConfig::Ellipse { a: 1.0, b: 0.5 },
            n: 1000,
            reps: 5000,
            m: limit::DEFAULT_TRUNCATION,
            regime: Regime::FixedN,
            seed: 20_160_101,
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidConfig(format!("n = {} must be >= 2", self.n)));
        }
        if self.reps < 1 {
            return Err(Error::InvalidConfig("reps must be >= 1".into()));
        }
        if self.m < 1 {
            return Err(Error::InvalidConfig("m must be >= 1".into()));
        }
        Ok(())
    }
}

/// How replications are spread over threads. Output never depends on it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Parallelism {
    /// `None` uses the available parallelism.
    pub threads: Option<usize>,
}

impl Parallelism {
    pub fn single() -> Self {
        Parallelism { threads: Some(1) }
    }

    pub fn threads(n: usize) -> Self {
        Parallelism { threads: Some(n) }
    }

    /// Maps `f` over `0..reps`, collecting results in index order.
    pub fn map_reps<T, F>(&self, reps: usize, f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(u64) -> Result<T> + Sync + Send,
    {
        let run = || {
            (0..reps as u64)
                .into_par_iter()
                .map(&f)
                .collect::<Result<Vec<T>>>()
        };
        match self.threads {
            Some(1) => (0..reps as u64).map(&f).collect(),
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?
                .install(run),
            None => run(),
        }
    }
}

/// Scaled deficiencies of `reps` clouds; replication `r` uses
/// `SeedSpec::new(master, r)`. Clouds with fewer than 2 points give `None`.
pub fn deficiency_samples(
    region: &Region,
    n: usize,
    regime: Regime,
    reps: usize,
    master: u64,
    par: Parallelism,
) -> Result<Vec<Option<f64>>> {
    let a = region.a();
    par.map_reps(reps, |r| {
        let cloud = sampling::sample_cloud(region, n, regime, SeedSpec::new(master, r))?;
        match sampling::scaled_deficiency(&cloud, a) {
            Ok(v) => Ok(Some(v)),
            Err(Error::StatisticUndefined(_)) => Ok(None),
            Err(e) => Err(e),
        }
    })
}

/// `reps` draws of the limit law truncated at `m`; replication `r` uses
/// `SeedSpec::new(master, r)`. Equal masters couple different `m`.
pub fn limit_samples(
    region: &Region,
    m: usize,
    reps: usize,
    master: u64,
    par: Parallelism,
) -> Result<Vec<f64>> {
    let constants = region.all_constants()?;
    let a = region.a();
    par.map_reps(reps, |r| {
        let mut rng = SeedSpec::new(master, r).rng();
        let na = limit::sample_sequences(&constants, m, &mut rng)?;
        Ok(limit::limit_from_sequences(&na, a)?.value)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EcdfRow {
    pub t: f64,
    pub f_empirical: f64,
    pub f_limit: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub config: ExperimentConfig,
    /// Scaled deficiency per replication, `None` for dropped ones.
    pub empirical: Vec<Option<f64>>,
    /// Truncated limit draw per replication.
    pub limit: Vec<f64>,
    pub empirical_cdf: EmpiricalCdf,
    pub limit_cdf: EmpiricalCdf,
    pub grid: Vec<EcdfRow>,
    pub ks: f64,
    pub dropped: usize,
    pub cloud_master: u64,
    pub limit_master: u64,
    pub wall_time: Duration,
}

impl ExperimentResult {
    /// Evaluation grid: [`GRID_POINTS`] points from 0 to the pooled
    /// [`GRID_UPPER_QUANTILE`] quantile.
    fn build_grid(emp: &EmpiricalCdf, lim: &EmpiricalCdf) -> Result<Vec<EcdfRow>> {
        let pooled = EmpiricalCdf::new(emp.values().iter().chain(lim.values()).copied())?;
        let hi = pooled.quantile(GRID_UPPER_QUANTILE)?;
        Ok(stats::linear_grid(0.0, hi, GRID_POINTS)
            .into_iter()
            .map(|t| EcdfRow {
                t,
                f_empirical: emp.eval(t),
                f_limit: lim.eval(t),
            })
            .collect())
    }
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult> {
    run_experiment_with(config, Parallelism::default())
}

/// Runs the experiment. Clouds and limit draws use separate stream families
/// derived from `config.seed`; results are identical for any parallelism.
pub fn run_experiment_with(
    config: &ExperimentConfig,
    par: Parallelism,
) -> Result<ExperimentResult> {
    config.check()?;
    let start = Instant::now();
    let region = config.region.build()?;
    let cloud_master = derive_master(config.seed, Stream::Cloud);
    let limit_master = derive_master(config.seed, Stream::Limit);

    let empirical = deficiency_samples(
        &region,
        config.n,
        config.regime,
        config.reps,
        cloud_master,
        par,
    )?;
    let limit = limit_samples(&region, config.m, config.reps, limit_master, par)?;

    let dropped = empirical.iter().filter(|v| v.is_none()).count();
    let empirical_cdf = EmpiricalCdf::new(empirical.iter().flatten().copied())?;
    let limit_cdf = EmpiricalCdf::new(limit.iter().copied())?;
    let grid = ExperimentResult::build_grid(&empirical_cdf, &limit_cdf)?;
    let ks = stats::ks_distance(&empirical_cdf, &limit_cdf);

    Ok(ExperimentResult {
        config: *config,
        empirical,
        limit,
        empirical_cdf,
        limit_cdf,
        grid,
        ks,
        dropped,
        cloud_master,
        limit_master,
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> ExperimentConfig {
        ExperimentConfig {
            n: 200,
            reps: 40,
            ..ExperimentConfig::reference()
        }
    }

    #[test]
    fn single_replication() {
        let cfg = ExperimentConfig { reps: 1, ..small() };
        let r = run_experiment_with(&cfg, Parallelism::single()).unwrap();
        assert!(r.ks == 0.0 || r.ks == 1.0);
        assert_eq!(r.grid.len(), GRID_POINTS);
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let cfg = small();
        let a = run_experiment_with(&cfg, Parallelism::single()).unwrap();
        let b = run_experiment_with(&cfg, Parallelism::threads(3)).unwrap();
        assert_eq!(a.empirical, b.empirical);
        assert_eq!(a.limit, b.limit);
        assert_eq!(a.grid, b.grid);
        assert_eq!(a.ks, b.ks);
    }

    #[test]
    fn rejects_bad_config() {
        let cfg = ExperimentConfig { n: 1, ..small() };
        assert!(run_experiment(&cfg).is_err());
        let cfg = ExperimentConfig { m: 0, ..small() };
        assert!(run_experiment(&cfg).is_err());
        let cfg = ExperimentConfig { reps: 0, ..small() };
        assert!(run_experiment(&cfg).is_err());
    }

    #[test]
    fn poissonized_small_n_counts_drops() {
        let region = Region::ellipse(1.0, 0.5).unwrap();
        let v = deficiency_samples(
            &region,
            2,
            Regime::Poissonized,
            400,
            7,
            Parallelism::single(),
        )
        .unwrap();
        let dropped = v.iter().filter(|x| x.is_none()).count();
        // P(Po(2) < 2) = 3 e^{-2} ≈ 0.406
        assert!(dropped > 100 && dropped < 230, "dropped {dropped}");
    }

    #[test]
    fn grid_is_monotone() {
        let r = run_experiment_with(&small(), Parallelism::single()).unwrap();
        for w in r.grid.windows(2) {
            assert!(w[0].t < w[1].t);
            assert!(w[0].f_empirical <= w[1].f_empirical);
            assert!(w[0].f_limit <= w[1].f_limit);
        }
        assert_eq!(r.grid[0].t, 0.0);
    }
}
