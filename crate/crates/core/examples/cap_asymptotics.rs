//! Cap area against c h^{3/2} and cap angle against tau h^{1/2} as the cap
//! height h shrinks.

use diamlimit::prelude::*;

fn main() -> Result<()> {
    println!(
        "{:>6} {:>8} {:>14} {:>14}",
        "b", "h", "area ratio", "angle ratio"
    );
    for b in [0.25, 0.5, 0.75] {
        let region = Region::ellipse(1.0, b)?;
        let k = region.constants(Quadrant::Q1)?;
        for h in [1e-1, 1e-2, 1e-3, 1e-4, 1e-5] {
            if h >= region.a() - b {
                continue;
            }
            let area = region.cap_area(Quadrant::Q1, h)? / (k.c * h.powf(1.5));
            let angle = region.cap_angle(Quadrant::Q1, h)? / (k.tau * h.sqrt());
            println!("{b:>6} {h:>8.0e} {area:>14.10} {angle:>14.10}");
        }
    }
    Ok(())
}
