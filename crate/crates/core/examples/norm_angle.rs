//! Norm-angle sequences: scaled norm deficiencies and folded angles of the
//! points closest to a pole.

use diamlimit::prelude::*;

fn main() -> Result<()> {
    let k = Region::ellipse(1.0, 0.5)?.constants(Quadrant::Q1)?;
    let mut rng = SeedSpec::new(7, 0).rng();

    let na = sample_norm_angle(k.sigma, k.tau, 6, &mut rng)?;
    println!(
        "one draw, m = 6 (sigma = {:.6}, tau = {:.6})",
        k.sigma, k.tau
    );
    for (i, (z1, z2)) in na.z1.iter().zip(&na.z2).enumerate() {
        println!(
            "  k = {}  z1 = {z1:.6}  z2 = {z2:.6}  z2/(tau sqrt z1) = {:.4}",
            i + 1,
            z2 / (k.tau * z1.sqrt())
        );
    }

    // E[Z1_k / sigma] = Gamma(k + 2/3) / Gamma(k).
    let draws = 200_000;
    let mut sums = [0.0f64; 3];
    for _ in 0..draws {
        let na = sample_norm_angle(k.sigma, k.tau, 3, &mut rng)?;
        for (s, z) in sums.iter_mut().zip(&na.z1) {
            *s += z / k.sigma;
        }
    }
    let exact = [
        0.902_745_292_950_933_6,
        1.504_575_488_251_556,
        2.005_900_651_002_074,
    ];
    for (i, (s, e)) in sums.iter().zip(exact).enumerate() {
        println!(
            "mean Z1_{}/sigma = {:.5}  (exact {e:.5})",
            i + 1,
            s / draws as f64
        );
    }
    Ok(())
}
