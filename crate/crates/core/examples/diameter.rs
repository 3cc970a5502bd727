//! Exact diameter of a random cloud: brute force against rotating calipers.
//!
//! cargo run --example diameter -- [n] [seed]

use std::time::Instant;

use diamlimit::geometry::{convex_hull, diameter_bruteforce, diameter_calipers};
use diamlimit::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(2000, |s| s.parse().expect("n"));
    let seed: u64 = args.next().map_or(1, |s| s.parse().expect("seed"));

    let region = Region::ellipse(1.0, 0.5)?;
    let cloud = sample_cloud(&region, n, Regime::FixedN, SeedSpec::new(seed, 0))?;

    let t = Instant::now();
    let (brute, bp) = diameter_bruteforce(&cloud.points)?;
    let brute_time = t.elapsed();
    let t = Instant::now();
    let (fast, fp) = diameter_calipers(&cloud.points)?;
    let fast_time = t.elapsed();

    println!(
        "{n} points, {} on the hull",
        convex_hull(&cloud.points).len()
    );
    println!("brute force  {brute:.15}  pair {bp:?}  {brute_time:.2?}");
    println!("calipers     {fast:.15}  pair {fp:?}  {fast_time:.2?}");
    println!("deficiency 2a - diam = {:.3e}", 2.0 * region.a() - fast);
    Ok(())
}
