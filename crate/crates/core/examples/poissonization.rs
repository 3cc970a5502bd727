//! Fixed sample size against a Poisson number of points with the same mean.

use diamlimit::experiment::deficiency_samples;
use diamlimit::prelude::*;

fn main() -> Result<()> {
    let region = Region::ellipse(1.0, 0.5)?;
    let reps = 3000;
    for n in [100, 1000] {
        let fixed =
            deficiency_samples(&region, n, Regime::FixedN, reps, 1, Parallelism::default())?;
        let pois = deficiency_samples(
            &region,
            n,
            Regime::Poissonized,
            reps,
            2,
            Parallelism::default(),
        )?;
        let dropped = pois.iter().filter(|v| v.is_none()).count();
        let ks = ks_distance(
            &EmpiricalCdf::new(fixed.into_iter().flatten())?,
            &EmpiricalCdf::new(pois.into_iter().flatten())?,
        );
        println!("n = {n:>5}: KS(fixed, poissonized) = {ks:.4}, {dropped} dropped");
    }
    Ok(())
}
