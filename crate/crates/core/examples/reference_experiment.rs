//! Scaled diameter deficiency of 1000 uniform points in the ellipse
//! a = 1, b = 1/2 against the limit law truncated at m = 8.
//!
//! cargo run --release --example reference_experiment -- [reps] [threads]

use diamlimit::experiment::run_experiment_with;
use diamlimit::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let mut config = ExperimentConfig::reference();
    if let Some(reps) = args.next() {
        config.reps = reps.parse().expect("reps");
    }
    let par = Parallelism {
        threads: args.next().map(|t| t.parse().expect("threads")),
    };

    let result = run_experiment_with(&config, par)?;
    println!(
        "n = {}, reps = {}, m = {}: KS = {:.4} ({:.2?})",
        config.n, config.reps, config.m, result.ks, result.wall_time
    );
    println!("{:>8} {:>12} {:>12}", "t", "F_empirical", "F_limit");
    for row in result.grid.iter().step_by(32) {
        println!(
            "{:>8.4} {:>12.4} {:>12.4}",
            row.t, row.f_empirical, row.f_limit
        );
    }
    Ok(())
}
