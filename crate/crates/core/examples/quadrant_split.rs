//! Whether the diameter is attained between opposite-pole quadrants, and by
//! which pair.

use diamlimit::prelude::*;

fn main() -> Result<()> {
    let region = Region::ellipse(1.0, 0.5)?;
    for n in [10, 100, 1000] {
        let reps = 2000;
        let mut hits = 0;
        let mut pairs = std::collections::BTreeMap::new();
        for r in 0..reps {
            let cloud = sample_cloud(&region, n, Regime::FixedN, SeedSpec::new(3, r))?;
            let report = quadrant_split_diagnostic(&cloud, region.a())?;
            if report.coincide {
                hits += 1;
            }
            if let Some((a, b)) = report.attaining {
                *pairs
                    .entry(format!("{}-{}", a.index(), b.index()))
                    .or_insert(0) += 1;
            }
        }
        println!(
            "n = {n:>5}: coincidence {:.4}, attaining pairs {pairs:?}",
            hits as f64 / reps as f64
        );
    }
    Ok(())
}
