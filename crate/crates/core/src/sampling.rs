//! Point clouds in a region, the scaled diameter deficiency, and the
//! cross-quadrant decomposition of the diameter.

use std::f64::consts::{FRAC_PI_2, TAU};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{self, Point, Quadrant};
use crate::region::{Region, RegionKind};
use crate::rng::{self, SeedSpec};

/// Consecutive rejections tolerated before a custom-region sampler gives up.
pub const MAX_REJECTIONS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// Exactly `n` i.i.d. points.
    FixedN,
    /// A `Po(n)` number of i.i.d. points, i.e. a Poisson process with
    /// intensity `n` times the sampling law.
    Poissonized,
}

impl std::str::FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed-n" | "fixed" => Ok(Regime::FixedN),
            "poissonized" | "poisson" => Ok(Regime::Poissonized),
            other => Err(Error::InvalidConfig(format!("unknown regime {other:?}"))),
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::FixedN => "fixed-n",
            Regime::Poissonized => "poissonized",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cloud {
    pub points: Vec<Point>,
    pub regime: Regime,
    pub nominal_n: usize,
}

/// One point from the uniform law on `region`.
pub fn sample_point<R: Rng + ?Sized>(region: &Region, rng: &mut R) -> Result<Point> {
    if !region.is_uniform() {
        return Err(Error::InvalidRegionParameter(
            "cloud sampling needs the uniform density".into(),
        ));
    }
    let a = region.a();
    match region.kind() {
        RegionKind::Ellipse { b } => {
            let r = rng::uniform(rng).sqrt();
            let theta = TAU * rng::uniform(rng);
            Ok(Point::new(a * r * theta.cos(), b * r * theta.sin()))
        }
        RegionKind::QuarterEllipse { b } => {
            let total: f64 = b.iter().sum();
            let pick = rng::uniform(rng) * total;
            let mut acc = 0.0;
            let mut quad = Quadrant::Q4;
            for q in Quadrant::ALL {
                acc += b[q.slot()];
                if pick < acc {
                    quad = q;
                    break;
                }
            }
            let r = rng::uniform(rng).sqrt();
            let theta = FRAC_PI_2 * rng::uniform(rng);
            let x = a * r * theta.cos();
            let y = b[quad.slot()] * r * theta.sin();
            Ok(match quad {
                Quadrant::Q1 => Point::new(x, y),
                Quadrant::Q2 => Point::new(-x, y),
                Quadrant::Q3 => Point::new(-x, -y),
                Quadrant::Q4 => Point::new(x, -y),
            })
        }
        RegionKind::Custom => {
            let [y_lo, y_hi] = region.y_range();
            for _ in 0..MAX_REJECTIONS {
                let x = a * (2.0 * rng::uniform(rng) - 1.0);
                let y = y_lo + (y_hi - y_lo) * rng::uniform(rng);
                let p = Point::new(x, y);
                if region.contains(p, 0.0) {
                    return Ok(p);
                }
            }
            Err(Error::SamplerStalled(MAX_REJECTIONS))
        }
    }
}

/// Draws a cloud on the stream identified by `seed`.
pub fn sample_cloud(region: &Region, n: usize, regime: Regime, seed: SeedSpec) -> Result<Cloud> {
    let mut rng = seed.rng();
    sample_cloud_with(region, n, regime, &mut rng)
}

pub fn sample_cloud_with<R: Rng + ?Sized>(
    region: &Region,
    n: usize,
    regime: Regime,
    rng: &mut R,
) -> Result<Cloud> {
    if n == 0 {
        return Err(Error::InvalidConfig("n must be >= 1".into()));
    }
    let count = match regime {
        Regime::FixedN => n,
        Regime::Poissonized => rng::poisson(rng, n as f64) as usize,
    };
    let points = (0..count)
        .map(|_| sample_point(region, rng))
        .collect::<Result<Vec<_>>>()?;
    Ok(Cloud {
        points,
        regime,
        nominal_n: n,
    })
}

/// `n^{2/3} (2a − diam)`, scaled by the nominal `n` of the cloud.
pub fn scaled_deficiency(cloud: &Cloud, a: f64) -> Result<f64> {
    if cloud.points.len() < 2 {
        return Err(Error::StatisticUndefined(cloud.points.len()));
    }
    let (diam, _) = geometry::diameter_calipers(&cloud.points)?;
    let scale = (cloud.nominal_n as f64).powf(2.0 / 3.0);
    // diam ≤ 2a holds exactly for points in the region; clamp rounding.
    Ok((scale * (2.0 * a - diam)).max(0.0))
}

/// The four cross-pole quadrant pairs whose maxima decide the diameter.
pub const CROSS_PAIRS: [(Quadrant, Quadrant); 4] = [
    (Quadrant::Q1, Quadrant::Q2),
    (Quadrant::Q1, Quadrant::Q3),
    (Quadrant::Q2, Quadrant::Q4),
    (Quadrant::Q3, Quadrant::Q4),
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossMaximum {
    pub pair: (Quadrant, Quadrant),
    /// `None` when either quadrant holds no point.
    pub distance: Option<f64>,
    /// Attaining point indices into the cloud.
    pub points: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadrantSplitReport {
    pub diameter: f64,
    pub deficiency: f64,
    pub cross: Vec<CrossMaximum>,
    /// Largest of the available cross-pair maxima.
    pub cross_max: Option<f64>,
    /// The quadrant pair attaining `cross_max`.
    pub attaining: Option<(Quadrant, Quadrant)>,
    /// Whether the diameter equals `cross_max` exactly.
    pub coincide: bool,
    pub skipped: Vec<(Quadrant, Quadrant)>,
}

/// Compares the diameter of a cloud with the largest of its four
/// cross-pole quadrant-pair maxima.
pub fn quadrant_split_diagnostic(cloud: &Cloud, a: f64) -> Result<QuadrantSplitReport> {
    let pts = &cloud.points;
    let (diam2, _) = geometry::diameter2_calipers(pts)?;

    let mut by_quad: [(Vec<Point>, Vec<usize>); 4] = Default::default();
    for (i, &p) in pts.iter().enumerate() {
        let slot = Quadrant::of(p).slot();
        by_quad[slot].0.push(p);
        by_quad[slot].1.push(i);
    }

    let mut cross = Vec::with_capacity(4);
    let mut skipped = Vec::new();
    let mut best: Option<(f64, (Quadrant, Quadrant))> = None;
    for &(qi, qj) in &CROSS_PAIRS {
        let (li, ids_i) = &by_quad[qi.slot()];
        let (lj, ids_j) = &by_quad[qj.slot()];
        match geometry::bichromatic_max2(li, lj) {
            Some((d2, (u, v))) => {
                if best.is_none_or(|(b, _)| d2 > b) {
                    best = Some((d2, (qi, qj)));
                }
                cross.push(CrossMaximum {
                    pair: (qi, qj),
                    distance: Some(d2.sqrt()),
                    points: Some((ids_i[u], ids_j[v])),
                });
            }
            None => {
                skipped.push((qi, qj));
                cross.push(CrossMaximum {
                    pair: (qi, qj),
                    distance: None,
                    points: None,
                });
            }
        }
    }

    let diameter = diam2.sqrt();
    Ok(QuadrantSplitReport {
        diameter,
        deficiency: 2.0 * a - diameter,
        cross,
        cross_max: best.map(|(d2, _)| d2.sqrt()),
        attaining: best.map(|(_, pair)| pair),
        coincide: best.is_some_and(|(d2, _)| d2 == diam2),
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cloud(points: Vec<Point>, n: usize) -> Cloud {
        Cloud {
            points,
            regime: Regime::FixedN,
            nominal_n: n,
        }
    }

    #[test]
    fn fixed_n_count_and_determinism() {
        let region = Region::ellipse(1.0, 0.5).unwrap();
        let seed = SeedSpec::new(11, 3);
        let c1 = sample_cloud(&region, 1000, Regime::FixedN, seed).unwrap();
        let c2 = sample_cloud(&region, 1000, Regime::FixedN, seed).unwrap();
        assert_eq!(c1.points.len(), 1000);
        assert_eq!(c1, c2);
        let c3 = sample_cloud(&region, 1000, Regime::FixedN, SeedSpec::new(11, 4)).unwrap();
        assert_ne!(c1, c3);
    }

    #[test]
    fn poissonized_keeps_nominal_n() {
        let region = Region::ellipse(1.0, 0.5).unwrap();
        let c = sample_cloud(&region, 500, Regime::Poissonized, SeedSpec::new(1, 0)).unwrap();
        assert_eq!(c.nominal_n, 500);
        assert_ne!(c.points.len(), 0);
    }

    #[test]
    fn deficiency_zero_at_poles() {
        let c = cloud(
            vec![
                Point::new(-2.0, 0.0),
                Point::new(0.1, 0.3),
                Point::new(2.0, 0.0),
            ],
            8,
        );
        assert_eq!(scaled_deficiency(&c, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn deficiency_scaling() {
        let c = cloud(vec![Point::new(-0.9, 0.0), Point::new(0.9, 0.0)], 1000);
        let v = scaled_deficiency(&c, 1.0).unwrap();
        assert!((v - 100.0 * 0.2).abs() < 1e-12);
    }

    #[test]
    fn deficiency_undefined_for_single_point() {
        let c = cloud(vec![Point::new(0.0, 0.0)], 1);
        assert_eq!(
            scaled_deficiency(&c, 1.0),
            Err(Error::StatisticUndefined(1))
        );
    }

    #[test]
    fn diagnostic_antipodal_pair() {
        let c = cloud(vec![Point::new(0.99, 0.01), Point::new(-0.99, -0.01)], 2);
        let r = quadrant_split_diagnostic(&c, 1.0).unwrap();
        assert!(r.coincide);
        assert_eq!(r.attaining, Some((Quadrant::Q1, Quadrant::Q3)));
        assert_eq!(r.skipped.len(), 3);
    }

    #[test]
    fn diagnostic_single_quadrant() {
        let c = cloud(
            vec![
                Point::new(0.1, 0.1),
                Point::new(0.9, 0.2),
                Point::new(0.5, 0.4),
            ],
            3,
        );
        let r = quadrant_split_diagnostic(&c, 1.0).unwrap();
        assert!(!r.coincide);
        assert_eq!(r.cross_max, None);
        assert_eq!(r.skipped.len(), 4);
        assert!((r.diameter - Point::new(0.1, 0.1).dist(&Point::new(0.9, 0.2))).abs() < 1e-15);
    }

    #[test]
    fn custom_sampler_on_thin_region() {
        use std::sync::Arc;
        let zero: crate::region::Boundary = Arc::new(|_| 0.0);
        let sliver: crate::region::Boundary =
            Arc::new(|x: f64| 1e-9 * (1.0 - x * x).max(0.0).sqrt());
        let region =
            Region::custom(1.0, [sliver, zero.clone(), zero.clone(), zero], [1.0; 4]).unwrap();
        let mut rng = SeedSpec::new(0, 0).rng();
        let p = sample_point(&region, &mut rng).unwrap();
        assert!(region.contains(p, 0.0));
    }

    #[test]
    fn non_uniform_region_refuses_cloud_sampling() {
        let region = Region::ellipse(1.0, 0.5)
            .unwrap()
            .with_pole_densities([1.0; 4], false)
            .unwrap();
        let mut rng = SeedSpec::new(0, 0).rng();
        assert!(sample_point(&region, &mut rng).is_err());
    }
}
