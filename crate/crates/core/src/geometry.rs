//! Planar primitives: points, polar form, quadrant folding, convex hulls and
//! exact diameters of finite point sets.
//!
//! All distance comparisons happen on squared distances; a square root is
//! taken once, on the final answer.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist2(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn dist(&self, other: &Point) -> f64 {
        self.dist2(other).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    fn lex_cmp(&self, other: &Point) -> Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.y.total_cmp(&other.y))
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point { x, y }
    }
}

/// Point in polar form, `phi` in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarPoint {
    pub r: f64,
    pub phi: f64,
}

impl PolarPoint {
    pub fn to_point(self) -> Point {
        Point::new(self.r * self.phi.cos(), self.r * self.phi.sin())
    }
}

impl From<Point> for PolarPoint {
    fn from(p: Point) -> Self {
        PolarPoint {
            r: p.norm(),
            phi: polar_angle(p),
        }
    }
}

/// Polar angle normalised to `[0, 2π)`.
pub fn polar_angle(p: Point) -> f64 {
    // `+ 0.0` clears a negative zero coming out of atan2.
    let mut phi = p.y.atan2(p.x) + 0.0;
    if phi < 0.0 {
        phi += TAU;
    }
    if phi >= TAU {
        phi -= TAU;
    }
    phi
}

/// The four open quadrants, numbered anti-clockwise from the positive one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Quadrant {
    Q1,
    Q2,
    Q3,
    Q4,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::Q1, Quadrant::Q2, Quadrant::Q3, Quadrant::Q4];

    /// 1-based index.
    pub fn index(self) -> usize {
        match self {
            Quadrant::Q1 => 1,
            Quadrant::Q2 => 2,
            Quadrant::Q3 => 3,
            Quadrant::Q4 => 4,
        }
    }

    pub fn from_index(i: usize) -> Result<Self> {
        match i {
            1 => Ok(Quadrant::Q1),
            2 => Ok(Quadrant::Q2),
            3 => Ok(Quadrant::Q3),
            4 => Ok(Quadrant::Q4),
            other => Err(Error::InvalidQuadrant(other)),
        }
    }

    /// Quadrant of a point. Axis points go to Q1 for `x ≥ 0, y ≥ 0`, Q2 for
    /// `x < 0, y ≥ 0`, Q3 for `x < 0, y < 0` and Q4 for `x ≥ 0, y < 0`.
    pub fn of(p: Point) -> Self {
        match (p.x >= 0.0, p.y >= 0.0) {
            (true, true) => Quadrant::Q1,
            (false, true) => Quadrant::Q2,
            (false, false) => Quadrant::Q3,
            (true, false) => Quadrant::Q4,
        }
    }

    /// Whether the quadrant touches the right pole `(a, 0)`.
    pub fn is_right(self) -> bool {
        matches!(self, Quadrant::Q1 | Quadrant::Q4)
    }

    pub fn is_upper(self) -> bool {
        matches!(self, Quadrant::Q1 | Quadrant::Q2)
    }

    /// Zero-based position, handy for `[T; 4]` tables.
    pub(crate) fn slot(self) -> usize {
        self.index() - 1
    }
}

/// Polar angle folded toward the pole of its quadrant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FoldedAngle {
    pub quadrant: Quadrant,
    pub w: f64,
}

impl FoldedAngle {
    /// Unfolded polar angle in `[0, 2π)`.
    pub fn polar_angle(&self) -> f64 {
        let v = match self.quadrant {
            Quadrant::Q1 => self.w,
            Quadrant::Q2 => PI - self.w,
            Quadrant::Q3 => PI + self.w,
            Quadrant::Q4 => TAU - self.w,
        };
        if v >= TAU {
            v - TAU
        } else {
            v
        }
    }

    /// Cartesian point at norm `r` with this folded angle.
    pub fn at_norm(&self, r: f64) -> Point {
        PolarPoint {
            r,
            phi: self.polar_angle(),
        }
        .to_point()
    }
}

/// Folds the polar angle of `p` toward the nearest pole.
pub fn fold_to_pole(p: Point) -> Result<FoldedAngle> {
    if p.x == 0.0 && p.y == 0.0 {
        return Err(Error::UndefinedAngle);
    }
    let quadrant = Quadrant::of(p);
    let phi = polar_angle(p);
    let w = match quadrant {
        Quadrant::Q1 => phi,
        Quadrant::Q2 => PI - phi,
        Quadrant::Q3 => phi - PI,
        Quadrant::Q4 => TAU - phi,
    };
    Ok(FoldedAngle { quadrant, w })
}

/// How two near-pole points sit relative to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Separation {
    /// Diagonally opposite quadrants, pairs (1,3) and (2,4): folded angles subtract.
    Opposite,
    /// Same side of the major axis, pairs (1,2) and (3,4): folded angles add.
    SameSide,
}

impl Separation {
    /// Separation of a cross-pole quadrant pair, `None` for same-pole pairs.
    pub fn between(q1: Quadrant, q2: Quadrant) -> Option<Self> {
        if q1.is_right() == q2.is_right() {
            None
        } else if q1.is_upper() == q2.is_upper() {
            Some(Separation::SameSide)
        } else {
            Some(Separation::Opposite)
        }
    }

    pub(crate) fn combine(self, w1: f64, w2: f64) -> f64 {
        match self {
            Separation::Opposite => w1 - w2,
            Separation::SameSide => w1 + w2,
        }
    }
}

/// Leading-order distance between two near-pole points on opposite poles:
/// `r1 + r2 - (a/4) E²`, where `E` is the difference (opposite quadrants) or
/// the sum (same side) of the folded angles.
pub fn pole_distance_expansion(
    r1: f64,
    w1: f64,
    r2: f64,
    w2: f64,
    a: f64,
    mode: Separation,
) -> f64 {
    let e = mode.combine(w1, w2);
    r1 + r2 - 0.25 * a * e * e
}

fn check_cloud(points: &[Point]) -> Result<()> {
    if points.len() < 2 {
        Err(Error::DegenerateCloud(points.len()))
    } else {
        Ok(())
    }
}

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Orientation of `(o, a, b)` with an exact sign: positive for a left turn.
fn orient(o: Point, a: Point, b: Point) -> f64 {
    let c = |p: Point| robust::Coord { x: p.x, y: p.y };
    robust::orient2d(c(o), c(a), c(b))
}

/// Diameter by enumerating every pair. Returns the distance and the
/// lexicographically smallest attaining index pair.
pub fn diameter_bruteforce(points: &[Point]) -> Result<(f64, (usize, usize))> {
    let (d2, pair) = diameter2_bruteforce(points)?;
    Ok((d2.sqrt(), pair))
}

/// Squared-distance form of [`diameter_bruteforce`].
pub fn diameter2_bruteforce(points: &[Point]) -> Result<(f64, (usize, usize))> {
    check_cloud(points)?;
    let mut best = (f64::NEG_INFINITY, (0, 1));
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            let d2 = p.dist2(q);
            if d2 > best.0 {
                best = (d2, (i, j));
            }
        }
    }
    Ok(best)
}

/// Indices of the convex hull vertices, counter-clockwise from the
/// lexicographically smallest vertex. Collinear boundary points are dropped;
/// duplicated coordinates are represented by their smallest index.
pub fn convex_hull_indices(points: &[Point]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].lex_cmp(&points[j]).then(i.cmp(&j)));
    order.dedup_by(|later, earlier| points[*later] == points[*earlier]);

    if order.len() <= 2 {
        return order;
    }

    // Andrew's monotone chain.
    let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
    for &i in &order {
        while hull.len() >= 2
            && orient(
                points[hull[hull.len() - 2]],
                points[hull[hull.len() - 1]],
                points[i],
            ) <= 0.0
        {
            hull.pop();
        }
        hull.push(i);
    }
    let lower_len = hull.len() + 1;
    for &i in order.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && orient(
                points[hull[hull.len() - 2]],
                points[hull[hull.len() - 1]],
                points[i],
            ) <= 0.0
        {
            hull.pop();
        }
        hull.push(i);
    }
    hull.pop();
    hull
}

/// Convex hull vertices, counter-clockwise, starting from the
/// lexicographically smallest vertex.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    convex_hull_indices(points)
        .into_iter()
        .map(|i| points[i])
        .collect()
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i <= j {
        (i, j)
    } else {
        (j, i)
    }
}

fn consider(best: &mut (f64, (usize, usize)), d2: f64, pair: (usize, usize)) {
    if d2 > best.0 || (d2 == best.0 && pair < best.1) {
        *best = (d2, pair);
    }
}

/// Diameter via convex hull and rotating calipers, `O(n log n)`.
///
/// Agrees with [`diameter_bruteforce`] on the distance, and on the index pair
/// whenever the pair of attaining coordinates is unique.
pub fn diameter_calipers(points: &[Point]) -> Result<(f64, (usize, usize))> {
    let (d2, pair) = diameter2_calipers(points)?;
    Ok((d2.sqrt(), pair))
}

/// Squared-distance form of [`diameter_calipers`].
pub fn diameter2_calipers(points: &[Point]) -> Result<(f64, (usize, usize))> {
    check_cloud(points)?;
    let hull = convex_hull_indices(points);
    Ok(hull_diameter2(points, &hull))
}

/// Largest squared distance among hull vertices `hull` (indices into
/// `points`), found by walking antipodal pairs.
pub(crate) fn hull_diameter2(points: &[Point], hull: &[usize]) -> (f64, (usize, usize)) {
    match hull.len() {
        0 => return (0.0, (0, 1)),
        1 => {
            // Every point coincides.
            return (0.0, (0, 1));
        }
        2 => {
            return (
                points[hull[0]].dist2(&points[hull[1]]),
                ordered(hull[0], hull[1]),
            );
        }
        _ => {}
    }
    let h = hull.len();
    let at = |k: usize| points[hull[k % h]];
    // cross(e_i, e_j) as a difference of two accurately evaluated
    // orientations; the plain coordinate form breaks down on thin hulls.
    let edge_cross = |i: usize, j: usize| {
        let (a0, a1) = (at(i), at(i + 1));
        orient(a0, a1, at(j + 1)) - orient(a0, a1, at(j))
    };

    let mut best = (f64::NEG_INFINITY, (0, 0));
    let mut j = 1;
    for i in 0..h {
        // Bounded walk; the pointer wraps at most once around the hull.
        let mut steps = 0;
        while edge_cross(i, j) > 0.0 && steps < h {
            j = (j + 1) % h;
            steps += 1;
        }
        let (ni, nj) = ((i + 1) % h, (j + 1) % h);
        for &(u, v) in &[(i, j), (ni, j), (i, nj), (ni, nj)] {
            let (pu, pv) = (hull[u], hull[v]);
            consider(&mut best, points[pu].dist2(&points[pv]), ordered(pu, pv));
        }
    }
    best
}

/// Largest squared distance between a point of `left` and a point of `right`,
/// with the attaining indices into each slice.
pub(crate) fn bichromatic_max2(left: &[Point], right: &[Point]) -> Option<(f64, (usize, usize))> {
    if left.is_empty() || right.is_empty() {
        return None;
    }
    let hl = convex_hull_indices(left);
    let hr = convex_hull_indices(right);
    let mut best: Option<(f64, (usize, usize))> = None;
    for &i in &hl {
        for &j in &hr {
            let d2 = left[i].dist2(&right[j]);
            match best {
                Some((b, pair)) if d2 < b || (d2 == b && (i, j) >= pair) => {}
                _ => best = Some((d2, (i, j))),
            }
        }
    }
    best
}

/// Signed-area test: whether `p` lies inside or on a counter-clockwise convex
/// polygon, with absolute tolerance `tol` on twice the signed area.
pub fn in_convex_polygon(polygon: &[Point], p: Point, tol: f64) -> bool {
    match polygon.len() {
        0 => false,
        1 => polygon[0].dist2(&p) <= tol,
        2 => {
            let (a, b) = (polygon[0], polygon[1]);
            let within_line = cross(a, b, p).abs() <= tol;
            let t = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
            within_line && t >= -tol && t <= a.dist2(&b) + tol
        }
        n => (0..n).all(|k| cross(polygon[k], polygon[(k + 1) % n], p) >= -tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bruteforce_single_pair() {
        let pts = [Point::new(0.0, 0.0), Point::new(3.0, 4.0)];
        assert_eq!(diameter_bruteforce(&pts).unwrap(), (5.0, (0, 1)));
        assert_eq!(diameter_calipers(&pts).unwrap(), (5.0, (0, 1)));
    }

    #[test]
    fn bruteforce_square_tie_break() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ];
        let (d, pair) = diameter_bruteforce(&pts).unwrap();
        assert_eq!(d, 2f64.sqrt());
        assert_eq!(pair, (0, 2));
        assert_eq!(diameter_calipers(&pts).unwrap(), (d, (0, 2)));
    }

    #[test]
    fn degenerate_clouds_rejected() {
        assert_eq!(diameter_bruteforce(&[]), Err(Error::DegenerateCloud(0)));
        assert_eq!(
            diameter_calipers(&[Point::new(1.0, 1.0)]),
            Err(Error::DegenerateCloud(1))
        );
    }

    #[test]
    fn hull_drops_interior_point() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, 0.1),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ];
        assert_eq!(
            convex_hull(&pts),
            vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(1.0, 1.0),
                Point::new(0.0, 1.0)
            ]
        );
    }

    #[test]
    fn hull_of_collinear_points() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(2.0, 2.0),
        ];
        assert_eq!(
            convex_hull(&pts),
            vec![Point::new(0.0, 0.0), Point::new(2.0, 2.0)]
        );
        let d = diameter_calipers(&pts).unwrap();
        assert_eq!(d.1, (0, 2));
    }

    #[test]
    fn hull_of_single_and_repeated_points() {
        let p = Point::new(0.3, -2.0);
        assert_eq!(convex_hull(&[p]), vec![p]);
        assert_eq!(convex_hull(&[p, p, p]), vec![p]);
        assert_eq!(diameter_calipers(&[p, p]).unwrap(), (0.0, (0, 1)));
    }

    #[test]
    fn hull_drops_collinear_edge_points() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(0.5, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
            Point::new(0.0, 0.5),
        ];
        assert_eq!(convex_hull_indices(&pts), vec![0, 2, 3, 4]);
    }

    #[test]
    fn hexagon_diameter() {
        let pts: Vec<Point> = (0..6)
            .map(|k| {
                let t = k as f64 * PI / 3.0;
                Point::new(t.cos(), t.sin())
            })
            .collect();
        let (d, _) = diameter_calipers(&pts).unwrap();
        assert!((d - 2.0).abs() < 1e-15);
    }

    #[test]
    fn duplicate_coordinates_use_smallest_indices() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.1),
        ];
        assert_eq!(diameter_bruteforce(&pts).unwrap().1, (0, 1));
        assert_eq!(diameter_calipers(&pts).unwrap().1, (0, 1));
    }

    #[test]
    fn fold_examples() {
        let f = fold_to_pole(Point::new(-1.0, 0.1)).unwrap();
        assert_eq!(f.quadrant, Quadrant::Q2);
        assert!((f.w - (PI - 0.1f64.atan2(-1.0))).abs() < 1e-15);
        assert!((f.w - 0.09966865249116204).abs() < 1e-12);

        let f = fold_to_pole(Point::new(0.5, -0.5)).unwrap();
        assert_eq!(f.quadrant, Quadrant::Q4);
        assert!((f.w - PI / 4.0).abs() < 1e-15);

        let f = fold_to_pole(Point::new(1.0, 0.0)).unwrap();
        assert_eq!(
            f,
            FoldedAngle {
                quadrant: Quadrant::Q1,
                w: 0.0
            }
        );
    }

    #[test]
    fn fold_axis_tie_rule() {
        assert_eq!(
            fold_to_pole(Point::new(0.0, 1.0)).unwrap().quadrant,
            Quadrant::Q1
        );
        let f = fold_to_pole(Point::new(-1.0, 0.0)).unwrap();
        assert_eq!((f.quadrant, f.w), (Quadrant::Q2, 0.0));
        assert_eq!(
            fold_to_pole(Point::new(-1.0, -0.0)).unwrap().quadrant,
            Quadrant::Q2
        );
        assert_eq!(
            fold_to_pole(Point::new(0.0, -1.0)).unwrap().quadrant,
            Quadrant::Q4
        );
        assert_eq!(fold_to_pole(Point::ORIGIN), Err(Error::UndefinedAngle));
    }

    #[test]
    fn expansion_formula() {
        assert_eq!(
            pole_distance_expansion(1.0, 0.0, 1.0, 0.0, 1.0, Separation::Opposite),
            2.0
        );
        let v = pole_distance_expansion(1.0, 0.01, 1.0, 0.0, 1.0, Separation::Opposite);
        assert!((v - 1.999975).abs() < 1e-15);
        let v = pole_distance_expansion(1.0, 0.01, 1.0, 0.02, 1.0, Separation::SameSide);
        assert!((v - (2.0 - 0.25 * 9e-4)).abs() < 1e-15);
    }

    #[test]
    fn separation_of_pairs() {
        use Quadrant::*;
        assert_eq!(Separation::between(Q1, Q3), Some(Separation::Opposite));
        assert_eq!(Separation::between(Q2, Q4), Some(Separation::Opposite));
        assert_eq!(Separation::between(Q1, Q2), Some(Separation::SameSide));
        assert_eq!(Separation::between(Q3, Q4), Some(Separation::SameSide));
        assert_eq!(Separation::between(Q1, Q4), None);
        assert_eq!(Separation::between(Q2, Q3), None);
    }

    #[test]
    fn polygon_membership() {
        let sq = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ];
        assert!(in_convex_polygon(&sq, Point::new(0.5, 0.5), 0.0));
        assert!(in_convex_polygon(&sq, Point::new(1.0, 0.5), 0.0));
        assert!(!in_convex_polygon(&sq, Point::new(1.0 + 1e-9, 0.5), 1e-12));
    }
}
