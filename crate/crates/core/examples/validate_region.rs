//! Assumption checks for preset and hand-written regions.

use std::sync::Arc;

use diamlimit::prelude::*;
use diamlimit::region::Boundary;

fn main() -> Result<()> {
    println!("ellipse a = 1, b = 0.5");
    print!("{}", Region::ellipse(1.0, 0.5)?.validate());

    println!("\nellipse a = 1, b = 1");
    match Region::ellipse(1.0, 1.0) {
        Ok(_) => println!("accepted"),
        Err(e) => println!("rejected: {e}"),
    }

    // Circle-like pole in quadrant 1: q = 2 fails the shape constant check.
    let circle: Boundary = Arc::new(|x: f64| (1.0 - x * x).max(0.0).sqrt());
    let upper: Boundary = Arc::new(|x: f64| 0.5 * (1.0 - x * x).max(0.0).sqrt());
    let lower: Boundary = Arc::new(|x: f64| -0.5 * (1.0 - x * x).max(0.0).sqrt());
    let region = Region::custom(
        1.0,
        [circle, upper, lower.clone(), lower],
        [2.0, 1.0, 1.0, 1.0],
    )?;
    let report = region.validate();
    println!("\ncircular quadrant 1: passed = {}", report.passed());
    for c in report.failures() {
        println!("  {}: {}", c.assumption, c.description);
    }
    Ok(())
}
