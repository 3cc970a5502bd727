//! A region given by hand-written boundary functions: validation, cap
//! verification, sampling and the limit-law comparison.

use std::sync::Arc;

use diamlimit::experiment::{deficiency_samples, limit_samples};
use diamlimit::prelude::*;
use diamlimit::region::Boundary;

fn main() -> Result<()> {
    let a = 1.0;
    // Upper half bulges away from the poles but keeps shape constant 1 there;
    // the lower half is a flatter ellipse arc with shape constant 0.8.
    let upper = move |x: f64| {
        let s = (a * a - x * x).max(0.0);
        0.5 * s.sqrt() * (1.0 + 0.5 * s / (a * a))
    };
    let lower = move |x: f64| -0.4 * (a * a - x * x).max(0.0).sqrt();
    let g: [Boundary; 4] = [
        Arc::new(upper),
        Arc::new(upper),
        Arc::new(lower),
        Arc::new(lower),
    ];
    let region = Region::custom(a, g, [1.0, 1.0, 0.8, 0.8])?;

    let report = region.validate();
    println!(
        "area {:.6}, validation passed: {}",
        region.area(),
        report.passed()
    );
    for quad in [Quadrant::Q1, Quadrant::Q4] {
        let k = region.constants(quad)?;
        let h = 1e-4;
        println!(
            "Q{}: cap area ratio {:.5}, cap angle ratio {:.5}",
            quad.index(),
            region.cap_area(quad, h)? / (k.c * h.powf(1.5)),
            region.cap_angle(quad, h)? / (k.tau * h.sqrt())
        );
    }

    let reps = 2000;
    let par = Parallelism::default();
    let empirical = deficiency_samples(&region, 2000, Regime::FixedN, reps, 5, par)?;
    let limit = limit_samples(&region, 8, reps, 6, par)?;
    let ks = ks_distance(
        &EmpiricalCdf::new(empirical.into_iter().flatten())?,
        &EmpiricalCdf::new(limit)?,
    );
    println!("n = 2000, {reps} reps: KS(scaled deficiency, limit m=8) = {ks:.4}");
    Ok(())
}
