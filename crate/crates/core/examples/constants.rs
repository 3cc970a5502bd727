//! Per-quadrant constants (c, sigma, tau) for a few regions.

use diamlimit::prelude::*;

fn show(name: &str, region: &Region) -> Result<()> {
    println!("{name}");
    for quad in Quadrant::ALL {
        let k = region.constants(quad)?;
        let i = quad.index() - 1;
        println!(
            "  Q{}  q = {:.4}  p = {:.6}  c = {:.10}  sigma = {:.10}  tau = {:.10}",
            quad.index(),
            region.q()[i],
            region.p()[i],
            k.c,
            k.sigma,
            k.tau
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    show("ellipse a = 1, b = 0.5", &Region::ellipse(1.0, 0.5)?)?;
    show("ellipse a = 2, b = 0.3", &Region::ellipse(2.0, 0.3)?)?;
    show(
        "quarter ellipses a = 1, b = (0.3, 0.6, 0.2, 0.8)",
        &Region::quarter_ellipse(1.0, [0.3, 0.6, 0.2, 0.8])?,
    )?;

    // The circle-like pole q = 2 is excluded.
    match constants(2.0, 1.0, 1.0) {
        Err(e) => println!("q = 2: {e}"),
        Ok(k) => println!("q = 2 unexpectedly accepted: {k:?}"),
    }
    Ok(())
}
