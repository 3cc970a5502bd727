//! Simulation and verification toolkit for the largest interpoint distance
//! of random points in planar regions with a unique major axis and
//! ellipse-like poles.
//!
//! For `n` points (or a Poisson number with mean `n`) in such a region, the
//! scaled deficiency `n^{2/3} (2a − diam)` converges in law to the minimum
//! of four cross-pole functionals of independent norm-angle sequences. This
//! crate provides
//!
//! * [`geometry`]: exact diameters (brute force and rotating calipers),
//!   convex hulls, quadrant folding;
//! * [`region`]: region presets, the per-quadrant constants, cap area and
//!   cap angle verifiers, and an assumption validator;
//! * [`sampling`]: reproducible point clouds and the scaled statistic;
//! * [`limit`]: the truncated limit-law sampler;
//! * [`stats`] and [`experiment`]: ECDFs, KS distances and the replicated
//!   comparison between finite clouds and the limit;
//! * [`cli`]: the `diamlimit` command-line surface.
//!
//! ```
//! use diamlimit::prelude::*;
//!
//! let region = Region::ellipse(1.0, 0.5).unwrap();
//! let cloud = sample_cloud(&region, 1000, Regime::FixedN, SeedSpec::new(1, 0)).unwrap();
//! let stat = scaled_deficiency(&cloud, region.a()).unwrap();
//! assert!(stat >= 0.0);
//!
//! let mut rng = SeedSpec::new(1, 0).rng();
//! let draw = sample_limit(&region, 8, &mut rng).unwrap();
//! assert!(draw.value >= 0.0);
//! ```

pub mod cli;
pub mod error;
pub mod experiment;
pub mod geometry;
pub mod limit;
pub mod quadrature;
pub mod region;
pub mod rng;
pub mod sampling;
pub mod stats;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::error::{Error, Result};
    pub use crate::experiment::{
        run_experiment, ExperimentConfig, ExperimentResult, Parallelism, RegionConfig,
    };
    pub use crate::geometry::{
        convex_hull, diameter_bruteforce, diameter_calipers, fold_to_pole, pole_distance_expansion,
        FoldedAngle, Point, PolarPoint, Quadrant, Separation,
    };
    pub use crate::limit::{
        s_cross, sample_limit, sample_norm_angle, LimitSample, NormAngleSample,
    };
    pub use crate::region::{constants, QuadrantConstants, Region, RegionKind, ValidationReport};
    pub use crate::rng::SeedSpec;
    pub use crate::sampling::{
        quadrant_split_diagnostic, sample_cloud, sample_point, scaled_deficiency, Cloud, Regime,
    };
    pub use crate::stats::{ks_distance, EmpiricalCdf};
}
