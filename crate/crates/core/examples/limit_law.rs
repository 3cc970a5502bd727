//! Draws from the truncated limit law and the effect of the truncation
//! order m.
//!
//! cargo run --example limit_law -- [reps]

use diamlimit::experiment::limit_samples;
use diamlimit::prelude::*;

fn main() -> Result<()> {
    let reps: usize = std::env::args()
        .nth(1)
        .map_or(5000, |s| s.parse().expect("reps"));
    let region = Region::ellipse(1.0, 0.5)?;

    let mut rng = SeedSpec::new(11, 0).rng();
    let s = sample_limit(&region, 8, &mut rng)?;
    println!(
        "single draw: {:.6}, attained by quadrants {}-{} at positions {:?}",
        s.value,
        s.pair.0.index(),
        s.pair.1.index(),
        s.indices
    );

    // One master for every m: each replication sees the same sequences, so
    // raising m can only lower the draw.
    let master = 2024;
    let reference = EmpiricalCdf::new(limit_samples(
        &region,
        64,
        reps,
        master,
        Parallelism::default(),
    )?)?;
    println!(
        "{:>4} {:>9} {:>9} {:>9} {:>12}",
        "m", "q10", "median", "q90", "KS vs m=64"
    );
    for m in [1, 2, 4, 8, 16, 32] {
        let e = EmpiricalCdf::new(limit_samples(
            &region,
            m,
            reps,
            master,
            Parallelism::default(),
        )?)?;
        println!(
            "{m:>4} {:>9.4} {:>9.4} {:>9.4} {:>12.4}",
            e.quantile(0.1)?,
            e.quantile(0.5)?,
            e.quantile(0.9)?,
            ks_distance(&e, &reference)
        );
    }
    Ok(())
}
