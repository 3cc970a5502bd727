//! Planar regions with a unique major axis and ellipse-like poles.
//!
//! A region is described by its half major axis `a` and four boundary
//! functions `g_1..g_4`, one per quadrant: `g_1 ≥ 0` and `g_4 ≤ 0` on `[0, a]`
//! bound the right half, `g_2 ≥ 0` and `g_3 ≤ 0` on `[-a, 0]` the left half.
//! Near each pole the boundary behaves like `q_i · √(a² − x²)/2`, and the
//! density there is `p_i`. Those two numbers determine the per-quadrant
//! constants that drive the limit law of the scaled diameter deficiency.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, Quadrant};
use crate::quadrature;

/// Boundary function `x ↦ g_i(x)`.
pub type Boundary = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Per-quadrant constants `(c, σ, τ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadrantConstants {
    /// Cap-area coefficient: area outside radius `a − h` is `~ c h^{3/2}`.
    pub c: f64,
    /// Scale of the norm deficiencies.
    pub sigma: f64,
    /// Scale of the folded angles: cap angle is `~ τ h^{1/2}`.
    pub tau: f64,
}

/// Computes `(c, σ, τ)` from the shape constant `q`, pole density `p` and
/// half major axis `a`.
pub fn constants(q: f64, p: f64, a: f64) -> Result<QuadrantConstants> {
    if !(q > 0.0 && q < 2.0) {
        return Err(Error::ShapeConstantOutOfRange(q));
    }
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::InvalidRegionParameter(format!(
            "pole density p = {p} must be > 0"
        )));
    }
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::InvalidRegionParameter(format!(
            "half major axis a = {a} must be > 0"
        )));
    }
    let c = 2.0 * q * (2.0 * a).sqrt() / (3.0 * (4.0 - q * q).sqrt());
    let sigma = (p * c).powf(-2.0 / 3.0);
    let tau = 1.5 * c / a;
    Ok(QuadrantConstants { c, sigma, tau })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RegionKind {
    Ellipse { b: f64 },
    QuarterEllipse { b: [f64; 4] },
    Custom,
}

/// A region satisfying (or being checked against) the pole assumptions.
///
/// Immutable once built.
#[derive(Clone)]
pub struct Region {
    a: f64,
    q: [f64; 4],
    p: [f64; 4],
    boundaries: [Boundary; 4],
    kind: RegionKind,
    area: f64,
    quadrant_areas: [f64; 4],
    uniform: bool,
    relaxed_a7: bool,
    y_range: [f64; 2],
}

impl fmt::Debug for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Region")
            .field("a", &self.a)
            .field("q", &self.q)
            .field("p", &self.p)
            .field("kind", &self.kind)
            .field("area", &self.area)
            .field("uniform", &self.uniform)
            .field("relaxed_a7", &self.relaxed_a7)
            .finish()
    }
}

fn quarter_profile(a: f64, b: f64) -> impl Fn(f64) -> f64 + Send + Sync + Copy {
    move |x: f64| {
        let x = x.abs().min(a);
        (b / a) * ((a - x) * (a + x)).sqrt()
    }
}

fn signed_boundaries(a: f64, b: [f64; 4]) -> [Boundary; 4] {
    let [b1, b2, b3, b4] = b;
    let (g1, g2, g3, g4) = (
        quarter_profile(a, b1),
        quarter_profile(a, b2),
        quarter_profile(a, b3),
        quarter_profile(a, b4),
    );
    [
        Arc::new(g1),
        Arc::new(g2),
        Arc::new(move |x| -g3(x)),
        Arc::new(move |x| -g4(x)),
    ]
}

impl Region {
    /// Uniform distribution in the ellipse `(x/a)² + (y/b)² ≤ 1`, `0 < b < a`.
    pub fn ellipse(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::DegenerateRegion(format!("a = {a} must be > 0")));
        }
        if b.is_nan() || b <= 0.0 {
            return Err(Error::DegenerateRegion(format!("b = {b} must be > 0")));
        }
        if b >= a {
            return Err(Error::NoUniqueMajorAxis { a, b });
        }
        let q = 2.0 * b / a;
        let area = PI * a * b;
        Ok(Region {
            a,
            q: [q; 4],
            p: [1.0 / area; 4],
            boundaries: signed_boundaries(a, [b; 4]),
            kind: RegionKind::Ellipse { b },
            area,
            quadrant_areas: [area / 4.0; 4],
            uniform: true,
            relaxed_a7: false,
            y_range: [-b, b],
        })
    }

    /// Uniform distribution in four quarter ellipses sharing the major axis,
    /// quadrant `i` having semi-minor axis `b[i-1]`.
    pub fn quarter_ellipse(a: f64, b: [f64; 4]) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::DegenerateRegion(format!("a = {a} must be > 0")));
        }
        for &bi in &b {
            if bi.is_nan() || bi <= 0.0 {
                return Err(Error::DegenerateRegion(format!("b_i = {bi} must be > 0")));
            }
            if bi >= a {
                return Err(Error::NoUniqueMajorAxis { a, b: bi });
            }
        }
        let quadrant_areas = b.map(|bi| PI * a * bi / 4.0);
        let area: f64 = quadrant_areas.iter().sum();
        Ok(Region {
            a,
            q: b.map(|bi| 2.0 * bi / a),
            p: [1.0 / area; 4],
            boundaries: signed_boundaries(a, b),
            kind: RegionKind::QuarterEllipse { b },
            area,
            quadrant_areas,
            uniform: true,
            relaxed_a7: false,
            y_range: [-b[2].max(b[3]), b[0].max(b[1])],
        })
    }

    /// Uniform distribution on a region given by its four boundary functions
    /// (`g_1, g_4` on `[0, a]`, `g_2, g_3` on `[-a, 0]`) and the claimed shape
    /// constants. The constants are not range-checked here; see
    /// [`Region::validate`].
    pub fn custom(a: f64, boundaries: [Boundary; 4], q: [f64; 4]) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::DegenerateRegion(format!("a = {a} must be > 0")));
        }
        if q.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidRegionParameter(
                "shape constants must be finite".into(),
            ));
        }
        let mut region = Region {
            a,
            q,
            p: [0.0; 4],
            boundaries,
            kind: RegionKind::Custom,
            area: 0.0,
            quadrant_areas: [0.0; 4],
            uniform: true,
            relaxed_a7: false,
            y_range: [0.0, 0.0],
        };
        for quad in Quadrant::ALL {
            let (v, _) = quadrature::integrate(|s| region.profile(quad, s), 0.0, a, 1e-12 * a * a);
            region.quadrant_areas[quad.slot()] = v;
        }
        region.area = region.quadrant_areas.iter().sum();
        if region.area.is_nan() || region.area <= 0.0 {
            return Err(Error::DegenerateRegion("region has zero area".into()));
        }
        region.p = [1.0 / region.area; 4];
        // Sampled envelope, padded since the grid can miss the true extremum.
        let mut top = 0.0f64;
        let mut bottom = 0.0f64;
        for k in 0..=4096 {
            let s = a * k as f64 / 4096.0;
            top = top
                .max(region.profile(Quadrant::Q1, s))
                .max(region.profile(Quadrant::Q2, s));
            bottom = bottom
                .max(region.profile(Quadrant::Q3, s))
                .max(region.profile(Quadrant::Q4, s));
        }
        region.y_range = [-1.05 * bottom, 1.05 * top];
        Ok(region)
    }

    /// Replaces the pole densities. Regions built this way describe a
    /// non-uniform law and can feed the limit-law sampler, but not the cloud
    /// sampler. Unless `relaxed_a7` is set, `p_1 = p_4` and `p_2 = p_3` are
    /// required.
    pub fn with_pole_densities(mut self, p: [f64; 4], relaxed_a7: bool) -> Result<Self> {
        if p.iter().any(|&v| !(v > 0.0 && v.is_finite())) {
            return Err(Error::InvalidRegionParameter(format!(
                "pole densities {p:?} must be > 0"
            )));
        }
        if !relaxed_a7 && (p[0] != p[3] || p[1] != p[2]) {
            return Err(Error::InvalidRegionParameter(
                "A7: p_1 = p_4 and p_2 = p_3 required unless relaxed".into(),
            ));
        }
        self.uniform = self.uniform && p.iter().all(|&v| v == 1.0 / self.area);
        self.p = p;
        self.relaxed_a7 = relaxed_a7;
        Ok(self)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn q(&self) -> [f64; 4] {
        self.q
    }

    pub fn p(&self) -> [f64; 4] {
        self.p
    }

    pub fn kind(&self) -> RegionKind {
        self.kind
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    /// Area of each quadrant piece.
    pub fn quadrant_areas(&self) -> [f64; 4] {
        self.quadrant_areas
    }

    /// Whether the region carries the uniform density on its area.
    pub fn is_uniform(&self) -> bool {
        self.uniform
    }

    pub fn relaxed_a7(&self) -> bool {
        self.relaxed_a7
    }

    /// Vertical extent `[y_min, y_max]` enclosing the region.
    pub fn y_range(&self) -> [f64; 2] {
        self.y_range
    }

    /// Signed boundary function of a quadrant.
    pub fn boundary(&self, quad: Quadrant) -> &Boundary {
        &self.boundaries[quad.slot()]
    }

    /// Unsigned half-width of quadrant `quad` at distance `s ∈ [0, a]` from
    /// the minor axis, measured toward that quadrant's pole.
    pub fn profile(&self, quad: Quadrant, s: f64) -> f64 {
        let g = &self.boundaries[quad.slot()];
        match quad {
            Quadrant::Q1 => g(s),
            Quadrant::Q2 => g(-s),
            Quadrant::Q3 => -g(-s),
            Quadrant::Q4 => -g(s),
        }
    }

    pub fn constants(&self, quad: Quadrant) -> Result<QuadrantConstants> {
        let i = quad.slot();
        constants(self.q[i], self.p[i], self.a)
    }

    pub fn all_constants(&self) -> Result<[QuadrantConstants; 4]> {
        Ok([
            self.constants(Quadrant::Q1)?,
            self.constants(Quadrant::Q2)?,
            self.constants(Quadrant::Q3)?,
            self.constants(Quadrant::Q4)?,
        ])
    }

    /// Membership with absolute tolerance `tol` (boundary inclusive).
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        if !p.is_finite() || p.x.abs() > self.a + tol {
            return false;
        }
        let x = p.x.clamp(-self.a, self.a);
        let (upper, lower) = if p.x >= 0.0 {
            (&self.boundaries[0], &self.boundaries[3])
        } else {
            (&self.boundaries[1], &self.boundaries[2])
        };
        p.y <= upper(x) + tol && p.y >= lower(x) - tol
    }

    /// Semi-minor axis of the quadrant for the ellipse presets.
    fn preset_b(&self, quad: Quadrant) -> Option<f64> {
        match self.kind {
            RegionKind::Ellipse { b } => Some(b),
            RegionKind::QuarterEllipse { b } => Some(b[quad.slot()]),
            RegionKind::Custom => None,
        }
    }

    fn check_h(&self, quad: Quadrant, h: f64) -> Result<()> {
        let max = match self.preset_b(quad) {
            Some(b) => self.a - b,
            None => self.a,
        };
        if !(h > 0.0 && h < max) {
            return Err(Error::CapUndefined { h, max });
        }
        Ok(())
    }

    /// Abscissa (distance from the minor axis toward the pole) where the
    /// quadrant boundary meets the circle of radius `a − h`.
    pub fn cap_abscissa(&self, quad: Quadrant, h: f64) -> Result<f64> {
        self.check_h(quad, h)?;
        let a = self.a;
        let r = a - h;
        if let Some(b) = self.preset_b(quad) {
            return Ok(a * ((r * r - b * b) / (a * a - b * b)).sqrt());
        }
        // Boundary minus circle; negative inside the circle, positive at s = r.
        let gap = |s: f64| self.profile(quad, s) - ((r - s) * (r + s)).max(0.0).sqrt();
        let (mut lo, mut hi) = (0.0, r);
        if !(gap(lo) < 0.0 && gap(hi) > 0.0) {
            return Err(Error::A6Violated(r));
        }
        while hi - lo > 1e-13 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if gap(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// Area of the part of quadrant `quad` outside the circle of radius
    /// `a − h`.
    pub fn cap_area(&self, quad: Quadrant, h: f64) -> Result<f64> {
        let a = self.a;
        let r = a - h;
        let xbar = self.cap_abscissa(quad, h)?;
        // Both integrands behave like √ at their right endpoint; substituting
        // s = end − t² makes them smooth.
        let tol = 1e-12_f64.min(1e-9 * h.powf(1.5));
        let t_outer = (a - xbar).max(0.0).sqrt();
        let (outer, _) = quadrature::integrate(
            |t| 2.0 * t * self.profile(quad, a - t * t),
            0.0,
            t_outer,
            tol,
        );
        let t_inner = (r - xbar).max(0.0).sqrt();
        let (inner, _) = quadrature::integrate(
            |t| 2.0 * t * t * (2.0 * r - t * t).max(0.0).sqrt(),
            0.0,
            t_inner,
            tol,
        );
        Ok(outer - inner)
    }

    /// Folded polar angle of the point where the quadrant boundary meets the
    /// circle of radius `a − h`.
    pub fn cap_angle(&self, quad: Quadrant, h: f64) -> Result<f64> {
        let a = self.a;
        let r = a - h;
        let xbar = self.cap_abscissa(quad, h)?;
        let height = match self.preset_b(quad) {
            Some(b) => b * (h * (2.0 * a - h) / (a * a - b * b)).sqrt(),
            None => ((r - xbar) * (r + xbar)).max(0.0).sqrt(),
        };
        Ok(height.atan2(xbar))
    }

    /// Checks the testable subset of the pole assumptions.
    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }
}

/// Outcome of one assumption check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub assumption: String,
    pub description: String,
    pub passed: bool,
    /// Advisory checks are reported but never fail the region.
    pub advisory: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    /// True when every non-advisory check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.advisory)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed && !c.advisory)
    }

    /// Report for a region that could not even be constructed.
    pub fn rejected(assumption: &str, description: String) -> Self {
        ValidationReport {
            checks: vec![Check {
                assumption: assumption.into(),
                description,
                passed: false,
                advisory: false,
            }],
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = match (c.passed, c.advisory) {
                (true, _) => "pass",
                (false, true) => "warn",
                (false, false) => "FAIL",
            };
            let tag = if c.advisory { " (advisory)" } else { "" };
            writeln!(f, "{status} {}: {}{tag}", c.assumption, c.description)?;
        }
        Ok(())
    }
}

const GRID: usize = 1024;

fn validate(region: &Region) -> ValidationReport {
    let a = region.a;
    let mut checks = Vec::new();
    let mut push = |assumption: &str, description: String, passed: bool, advisory: bool| {
        checks.push(Check {
            assumption: assumption.into(),
            description,
            passed,
            advisory,
        })
    };

    for quad in Quadrant::ALL {
        let i = quad.index();
        let q = region.q[i - 1];
        push(
            "A5",
            format!("q_{i} = {q} lies in (0,2)"),
            q > 0.0 && q < 2.0,
            false,
        );
    }

    for quad in Quadrant::ALL {
        let i = quad.index();
        let p = region.p[i - 1];
        push(
            "A7",
            format!("p_{i} = {p} > 0"),
            p > 0.0 && p.is_finite(),
            false,
        );
    }
    let [p1, p2, p3, p4] = region.p;
    push(
        "A7",
        format!(
            "p_1 = p_4 and p_2 = p_3{}",
            if region.relaxed_a7 { " (relaxed)" } else { "" }
        ),
        region.relaxed_a7 || (p1 == p4 && p2 == p3),
        false,
    );

    let pole_tol = 1e-9 * a;
    for quad in Quadrant::ALL {
        let i = quad.index();
        let at_pole = region.profile(quad, a);
        push(
            "A4",
            format!("|g_{i}| = {at_pole:.3e} at the pole"),
            at_pole.abs() < pole_tol,
            false,
        );
    }

    for quad in Quadrant::ALL {
        let i = quad.index();
        let nonneg = (0..=GRID).all(|k| region.profile(quad, a * k as f64 / GRID as f64) >= 0.0);
        let sign = if quad.is_upper() { "≥ 0" } else { "≤ 0" };
        push("A4", format!("g_{i} {sign} on its domain"), nonneg, false);
    }

    // A1/A2: every boundary point except the pole lies strictly inside the
    // circle of radius a.
    for quad in Quadrant::ALL {
        let i = quad.index();
        let inside = (0..GRID).all(|k| {
            let s = a * k as f64 / GRID as f64;
            let y = region.profile(quad, s);
            s * s + y * y < a * a
        });
        push(
            "A2",
            format!("quadrant {i} boundary lies strictly inside radius a away from the pole"),
            inside,
            false,
        );
    }

    for quad in Quadrant::ALL {
        let i = quad.index();
        let near = region.profile(quad, a - 1e-6 * a);
        push(
            "A3",
            format!("quadrant {i} has positive width near its pole"),
            near > 0.0,
            false,
        );
    }

    for quad in Quadrant::ALL {
        let i = quad.index();
        let span = 0.1 * a;
        let monotone = (0..GRID).all(|k| {
            let s0 = a - span + span * k as f64 / GRID as f64;
            let s1 = a - span + span * (k + 1) as f64 / GRID as f64;
            region.profile(quad, s1) <= region.profile(quad, s0)
        });
        let cap = region.cap_abscissa(quad, 1e-3 * a).is_ok();
        push(
            "A6",
            format!("quadrant {i} boundary decreases near its pole and meets the circle of radius a(1 - 1e-3) once"),
            monotone && cap,
            false,
        );
    }

    for quad in Quadrant::ALL {
        let i = quad.index();
        let q = region.q[i - 1];
        let s = a - 1e-6;
        let fa = ((a - s) * (a + s)).sqrt() / 2.0;
        let ratio = region.profile(quad, s) / fa;
        let ok = q > 0.0 && ((ratio - q) / q).abs() <= 0.05;
        push(
            "A5",
            format!("g_{i}/f_a = {ratio:.6} within 5% of q_{i} = {q} at |x| = a - 1e-6"),
            ok,
            true,
        );
    }

    ValidationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn constants_reference_values() {
        // Closed forms evaluated at 30 digits.
        let k = constants(1.0, 2.0 / PI, 1.0).unwrap();
        assert!(rel(k.c, 0.544_331_053_951_817_4) < 1e-14);
        assert!(rel(k.sigma, 2.026_925_767_547_617_6) < 1e-14);
        assert!(rel(k.tau, 0.816_496_580_927_726) < 1e-14);
    }

    #[test]
    fn constants_reject_out_of_range() {
        assert_eq!(
            constants(2.0, 1.0, 1.0),
            Err(Error::ShapeConstantOutOfRange(2.0))
        );
        assert_eq!(
            constants(0.0, 1.0, 1.0),
            Err(Error::ShapeConstantOutOfRange(0.0))
        );
        assert!(matches!(
            constants(1.0, 0.0, 1.0),
            Err(Error::InvalidRegionParameter(_))
        ));
        assert!(matches!(
            constants(1.0, 1.0, -1.0),
            Err(Error::InvalidRegionParameter(_))
        ));
    }

    #[test]
    fn ellipse_preset() {
        let r = Region::ellipse(1.0, 0.5).unwrap();
        assert_eq!(r.q(), [1.0; 4]);
        for p in r.p() {
            assert!(rel(p, 2.0 / PI) < 1e-15);
        }
        let r = Region::ellipse(2.0, 1.0).unwrap();
        assert_eq!(r.q(), [1.0; 4]);
        assert!(rel(r.p()[0], 1.0 / (2.0 * PI)) < 1e-15);
    }

    #[test]
    fn ellipse_rejects_bad_axes() {
        assert!(matches!(
            Region::ellipse(1.0, 1.0),
            Err(Error::NoUniqueMajorAxis { .. })
        ));
        assert!(matches!(
            Region::ellipse(1.0, 1.5),
            Err(Error::NoUniqueMajorAxis { .. })
        ));
        assert!(matches!(
            Region::ellipse(1.0, 0.0),
            Err(Error::DegenerateRegion(_))
        ));
        assert!(Region::ellipse(1.0, 0.999_999).is_ok());
    }

    #[test]
    fn quarter_ellipse_preset() {
        let r = Region::quarter_ellipse(1.0, [0.5, 0.25, 0.5, 0.25]).unwrap();
        assert_eq!(r.q(), [1.0, 0.5, 1.0, 0.5]);
        assert!(rel(r.area(), PI / 4.0 * 1.5) < 1e-15);
        let k = r.all_constants().unwrap();
        assert!(k[1].sigma > k[0].sigma);
        assert!(matches!(
            Region::quarter_ellipse(1.0, [0.5, 1.0, 0.5, 0.5]),
            Err(Error::NoUniqueMajorAxis { .. })
        ));
    }

    #[test]
    fn quarter_ellipse_reduces_to_ellipse() {
        let e = Region::ellipse(1.5, 0.6).unwrap();
        let qe = Region::quarter_ellipse(1.5, [0.6; 4]).unwrap();
        assert_eq!(e.q(), qe.q());
        assert!(rel(e.area(), qe.area()) < 1e-15);
        assert_eq!(e.all_constants().unwrap(), qe.all_constants().unwrap());
        for s in [0.0, 0.7, 1.4, 1.5] {
            assert_eq!(e.profile(Quadrant::Q3, s), qe.profile(Quadrant::Q3, s));
        }
    }

    #[test]
    fn cap_angle_reference_value() {
        let r = Region::ellipse(1.0, 0.5).unwrap();
        let xbar = r.cap_abscissa(Quadrant::Q1, 0.01).unwrap();
        assert!((xbar - 0.986_644_143_887_078_8).abs() < 1e-14);
        let g = r.cap_angle(Quadrant::Q1, 0.01).unwrap();
        assert!((g - 0.082_361_039_989_022_35).abs() < 1e-14);
    }

    #[test]
    fn cap_area_reference_value() {
        let r = Region::ellipse(1.0, 0.5).unwrap();
        let area = r.cap_area(Quadrant::Q2, 1e-3).unwrap();
        assert!(rel(area, 1.721_182_591_974_403e-5) < 1e-9);
    }

    #[test]
    fn cap_symmetry_and_range() {
        let r = Region::ellipse(1.0, 0.5).unwrap();
        let areas: Vec<f64> = Quadrant::ALL
            .iter()
            .map(|&q| r.cap_area(q, 0.02).unwrap())
            .collect();
        for a in &areas {
            assert!((a - areas[0]).abs() < 1e-10);
        }
        assert!(matches!(
            r.cap_area(Quadrant::Q1, 0.5),
            Err(Error::CapUndefined { .. })
        ));
        assert!(matches!(
            r.cap_area(Quadrant::Q1, 0.0),
            Err(Error::CapUndefined { .. })
        ));
        assert!(r.cap_area(Quadrant::Q1, 1e-9).unwrap() < 1e-12);
        assert!(r.cap_angle(Quadrant::Q1, 1e-12).unwrap() < 1e-5);
    }

    #[test]
    fn custom_region_matches_preset() {
        let e = Region::ellipse(1.0, 0.5).unwrap();
        let g: [Boundary; 4] = [
            Arc::new(|x: f64| 0.5 * (1.0 - x * x).max(0.0).sqrt()),
            Arc::new(|x: f64| 0.5 * (1.0 - x * x).max(0.0).sqrt()),
            Arc::new(|x: f64| -0.5 * (1.0 - x * x).max(0.0).sqrt()),
            Arc::new(|x: f64| -0.5 * (1.0 - x * x).max(0.0).sqrt()),
        ];
        let c = Region::custom(1.0, g, [1.0; 4]).unwrap();
        assert!(rel(c.area(), e.area()) < 1e-9);
        for h in [1e-2, 1e-3] {
            let xe = e.cap_abscissa(Quadrant::Q3, h).unwrap();
            let xc = c.cap_abscissa(Quadrant::Q3, h).unwrap();
            assert!((xe - xc).abs() < 1e-12);
            assert!(
                rel(
                    c.cap_area(Quadrant::Q3, h).unwrap(),
                    e.cap_area(Quadrant::Q3, h).unwrap()
                ) < 1e-6
            );
            assert!(
                rel(
                    c.cap_angle(Quadrant::Q3, h).unwrap(),
                    e.cap_angle(Quadrant::Q3, h).unwrap()
                ) < 1e-9
            );
        }
        assert!(c.validate().passed());
    }

    #[test]
    fn validate_presets_pass() {
        let report = Region::ellipse(1.0, 0.5).unwrap().validate();
        assert!(report.passed(), "{report}");
        assert!(report.checks.iter().all(|c| c.passed), "{report}");
        let report = Region::quarter_ellipse(2.0, [0.5, 1.0, 1.5, 0.3])
            .unwrap()
            .validate();
        assert!(report.checks.iter().all(|c| c.passed), "{report}");
    }

    #[test]
    fn validate_flags_circle_like_pole() {
        let circle: Boundary = Arc::new(|x: f64| (1.0 - x * x).max(0.0).sqrt());
        let half: Boundary = Arc::new(|x: f64| 0.5 * (1.0 - x * x).max(0.0).sqrt());
        let neg_half: Boundary = Arc::new(|x: f64| -0.5 * (1.0 - x * x).max(0.0).sqrt());
        let r = Region::custom(
            1.0,
            [circle, half.clone(), neg_half.clone(), neg_half],
            [2.0, 1.0, 1.0, 1.0],
        )
        .unwrap();
        let report = r.validate();
        assert!(!report.passed());
        assert!(report.failures().any(|c| c.assumption == "A5"));
        assert!(r.constants(Quadrant::Q1).is_err());
    }

    #[test]
    fn pole_density_override() {
        let r = Region::ellipse(1.0, 0.5).unwrap();
        assert!(r
            .clone()
            .with_pole_densities([1.0, 2.0, 2.0, 1.0], false)
            .is_ok());
        assert!(r
            .clone()
            .with_pole_densities([1.0, 2.0, 2.0, 3.0], false)
            .is_err());
        let relaxed = r.with_pole_densities([1.0, 2.0, 2.0, 3.0], true).unwrap();
        assert!(!relaxed.is_uniform());
        assert!(relaxed.validate().passed());
    }

    #[test]
    fn containment_predicate() {
        let r = Region::ellipse(2.0, 1.0).unwrap();
        assert!(r.contains(Point::new(2.0, 0.0), 0.0));
        assert!(r.contains(Point::new(0.0, -1.0), 1e-12));
        assert!(!r.contains(Point::new(1.9, 0.5), 1e-12));
        assert!(!r.contains(Point::new(2.0 + 1e-6, 0.0), 1e-12));
    }
}
