//! Planar kernel: points, discs, tolerances and the precise directed
//! Hausdorff distance.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn dist_sq(self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn scale(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }

    /// Counter-clockwise rotation by `angle` radians.
    pub fn rotate(self, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Unit vector at `angle` radians from the positive x axis.
    pub fn polar(angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        Point::new(c, s)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Lexicographic comparison on (x, y).
    pub fn lex_cmp(&self, other: &Point) -> std::cmp::Ordering {
        self.x.total_cmp(&other.x).then_with(|| self.y.total_cmp(&other.y))
    }
}

impl std::ops::Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl std::ops::Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A closed disc. An imprecise point is known only to lie somewhere inside it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Disc {
    pub centre: Point,
    pub radius: f64,
}

impl Disc {
    pub const fn new(centre: Point, radius: f64) -> Self {
        Disc { centre, radius }
    }

    /// A precise point viewed as a disc of radius zero.
    pub const fn point(p: Point) -> Self {
        Disc { centre: p, radius: 0.0 }
    }

    pub fn contains(&self, p: Point, tol: &Tolerance) -> bool {
        self.centre.dist(p) <= self.radius + tol.eps_predicate
    }

    /// Boundary point at `angle` radians.
    pub fn boundary_at(&self, angle: f64) -> Point {
        self.centre + Point::polar(angle).scale(self.radius)
    }

    pub fn is_valid(&self) -> bool {
        self.centre.is_finite() && self.radius.is_finite() && self.radius >= 0.0
    }

    /// Grown copy with radius `radius + by`.
    pub fn grown(&self, by: f64) -> Disc {
        Disc::new(self.centre, self.radius + by)
    }
}

/// Numeric policy shared by every predicate in the crate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    /// Slack for every sign and membership test.
    pub eps_predicate: f64,
    /// Target width for one-dimensional root refinement.
    pub eps_root: f64,
    /// Number of samples used to isolate roots along a circle.
    pub boundary_samples: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_predicate: 1e-9,
            eps_root: 1e-12,
            boundary_samples: 1024,
        }
    }
}

impl Tolerance {
    pub fn with_eps(eps_predicate: f64) -> Result<Self> {
        let tol = Tolerance {
            eps_predicate,
            ..Tolerance::default()
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.eps_predicate > 0.0
            && self.eps_predicate.is_finite()
            && self.eps_root > 0.0
            && self.eps_root.is_finite()
            && self.boundary_samples > 0;
        if ok {
            Ok(())
        } else {
            Err(Error::invalid("tolerances must be strictly positive"))
        }
    }
}

pub fn validate_points(points: &[Point]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::invalid("point set is empty"));
    }
    if let Some(i) = points.iter().position(|p| !p.is_finite()) {
        return Err(Error::invalid(format!("point {i} has a non-finite coordinate")));
    }
    Ok(())
}

pub fn validate_discs(discs: &[Disc]) -> Result<()> {
    if discs.is_empty() {
        return Err(Error::invalid("disc set is empty"));
    }
    if let Some(i) = discs.iter().position(|d| !d.is_valid()) {
        return Err(Error::invalid(format!(
            "disc {i} is not a finite disc with radius >= 0"
        )));
    }
    Ok(())
}

pub fn centres(discs: &[Disc]) -> Vec<Point> {
    discs.iter().map(|d| d.centre).collect()
}

pub fn min_radius(discs: &[Disc]) -> f64 {
    discs.iter().map(|d| d.radius).fold(f64::INFINITY, f64::min)
}

pub fn max_radius(discs: &[Disc]) -> f64 {
    discs.iter().map(|d| d.radius).fold(0.0, f64::max)
}

/// Pairwise centre distance strictly exceeds the sum of radii.
pub fn pairwise_disjoint(discs: &[Disc], tol: &Tolerance) -> bool {
    first_overlapping_pair(discs, tol).is_none()
}

pub fn first_overlapping_pair(discs: &[Disc], tol: &Tolerance) -> Option<(usize, usize)> {
    for i in 0..discs.len() {
        for j in i + 1..discs.len() {
            let gap = discs[i].centre.dist(discs[j].centre) - discs[i].radius - discs[j].radius;
            if gap <= tol.eps_predicate {
                return Some((i, j));
            }
        }
    }
    None
}

/// `max_p min_q |p - q|`, evaluated naively.
pub fn directed_hausdorff(p: &[Point], q: &[Point]) -> Result<f64> {
    if p.is_empty() || q.is_empty() {
        return Err(Error::invalid("directed Hausdorff distance of an empty set"));
    }
    Ok(p.iter().map(|a| nearest_distance(*a, q)).fold(0.0, f64::max))
}

/// The point of `p` realising the distance, with its nearest partner in `q`.
pub fn critical_pair(p: &[Point], q: &[Point]) -> Result<(usize, usize)> {
    if p.is_empty() || q.is_empty() {
        return Err(Error::invalid("directed Hausdorff distance of an empty set"));
    }
    let mut best = (0, 0, f64::NEG_INFINITY);
    for (i, a) in p.iter().enumerate() {
        let (j, d) = nearest(*a, q);
        if d > best.2 {
            best = (i, j, d);
        }
    }
    Ok((best.0, best.1))
}

pub(crate) fn nearest_distance(x: Point, q: &[Point]) -> f64 {
    q.iter().map(|b| x.dist(*b)).fold(f64::INFINITY, f64::min)
}

pub(crate) fn nearest(x: Point, q: &[Point]) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (j, b) in q.iter().enumerate() {
        let d = x.dist(*b);
        if d < best.1 {
            best = (j, d);
        }
    }
    best
}

/// Result of intersecting two circles.
#[derive(Clone, Debug, PartialEq)]
pub enum CircleIntersection {
    /// Zero, one (tangency) or two points.
    Points(Vec<Point>),
    /// Identical circles; every boundary point is shared.
    Coincident,
}

pub fn circle_circle_intersections(a: &Disc, b: &Disc, tol: &Tolerance) -> CircleIntersection {
    let eps = tol.eps_predicate;
    let delta = b.centre - a.centre;
    let d = delta.norm();
    if d <= eps {
        if (a.radius - b.radius).abs() <= eps {
            return CircleIntersection::Coincident;
        }
        return CircleIntersection::Points(Vec::new());
    }
    let (r1, r2) = (a.radius, b.radius);
    if d > r1 + r2 + eps || d < (r1 - r2).abs() - eps {
        return CircleIntersection::Points(Vec::new());
    }
    let u = delta.scale(1.0 / d);
    // Distance from a's centre to the radical line, measured along u.
    let along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let h_sq = r1 * r1 - along * along;
    let foot = a.centre + u.scale(along);
    let tangent = (d - (r1 + r2)).abs() <= eps || (d - (r1 - r2).abs()).abs() <= eps;
    if tangent || h_sq <= 0.0 {
        return CircleIntersection::Points(vec![foot]);
    }
    let h = h_sq.sqrt();
    let n = Point::new(-u.y, u.x);
    CircleIntersection::Points(vec![foot + n.scale(h), foot - n.scale(h)])
}

/// A point lying in every disc, if the discs have a common point.
///
/// A non-empty intersection of closed discs either equals one of the
/// discs (and then holds its centre) or is bounded by arcs meeting at
/// pairwise boundary intersections, so testing those candidates is exact.
pub fn discs_common_point(discs: &[Disc], tol: &Tolerance) -> Option<Point> {
    let inside_all = |p: Point| discs.iter().all(|d| d.contains(p, tol));
    if let Some(p) = discs.iter().map(|d| d.centre).find(|&c| inside_all(c)) {
        return Some(p);
    }
    for i in 0..discs.len() {
        for j in i + 1..discs.len() {
            if let CircleIntersection::Points(pts) = circle_circle_intersections(&discs[i], &discs[j], tol) {
                if let Some(p) = pts.into_iter().find(|&p| inside_all(p)) {
                    return Some(p);
                }
            }
        }
    }
    None
}

pub fn closest_point_in_disc(x: Point, d: &Disc) -> Point {
    let off = x - d.centre;
    let len = off.norm();
    if len <= d.radius {
        x
    } else {
        d.centre + off.scale(d.radius / len)
    }
}

/// Boundary point of `d` antipodal to `x` through the centre.
pub fn farthest_point_in_disc(x: Point, d: &Disc, tol: &Tolerance) -> Point {
    let off = d.centre - x;
    let len = off.norm();
    if len <= tol.eps_predicate {
        d.centre + Point::new(d.radius, 0.0)
    } else {
        d.centre + off.scale(d.radius / len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn disc(x: f64, y: f64, r: f64) -> Disc {
        Disc::new(p(x, y), r)
    }

    fn close(a: Point, b: Point) -> bool {
        a.dist(b) < 1e-9
    }

    #[test]
    fn hausdorff_examples() {
        assert_eq!(directed_hausdorff(&[p(0., 0.), p(3., 0.)], &[p(0., 0.)]).unwrap(), 3.0);
        let s = [p(0., 0.), p(1., 1.)];
        assert_eq!(directed_hausdorff(&s, &s).unwrap(), 0.0);
        let a = [p(0., 0.), p(1., 1.)];
        let b = [p(0., 1.), p(2., 0.)];
        assert!((directed_hausdorff(&a, &b).unwrap() - 1.0).abs() < 1e-12);
        assert!((directed_hausdorff(&b, &a).unwrap() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn hausdorff_rejects_empty() {
        assert!(directed_hausdorff(&[], &[p(0., 0.)]).is_err());
        assert!(directed_hausdorff(&[p(0., 0.)], &[]).is_err());
    }

    #[test]
    fn circle_intersection_examples() {
        let tol = Tolerance::default();
        match circle_circle_intersections(&disc(0., 0., 1.), &disc(2., 0., 1.), &tol) {
            CircleIntersection::Points(v) => {
                assert_eq!(v.len(), 1);
                assert!(close(v[0], p(1., 0.)));
            }
            other => panic!("{other:?}"),
        }
        match circle_circle_intersections(&disc(0., 0., 1.), &disc(1., 0., 1.), &tol) {
            CircleIntersection::Points(v) => {
                let h = 3f64.sqrt() / 2.0;
                assert_eq!(v.len(), 2);
                assert!(v.iter().any(|&q| close(q, p(0.5, h))));
                assert!(v.iter().any(|&q| close(q, p(0.5, -h))));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            circle_circle_intersections(&disc(0., 0., 1.), &disc(5., 0., 1.), &tol),
            CircleIntersection::Points(vec![])
        );
        assert_eq!(
            circle_circle_intersections(&disc(1., 1., 2.), &disc(1., 1., 2.), &tol),
            CircleIntersection::Coincident
        );
        // Concentric circles of different size never meet.
        assert_eq!(
            circle_circle_intersections(&disc(1., 1., 2.), &disc(1., 1., 1.), &tol),
            CircleIntersection::Points(vec![])
        );
    }

    #[test]
    fn internal_tangency_is_one_point() {
        let tol = Tolerance::default();
        match circle_circle_intersections(&disc(0., 0., 2.), &disc(1., 0., 1.), &tol) {
            CircleIntersection::Points(v) => {
                assert_eq!(v.len(), 1);
                assert!(close(v[0], p(2., 0.)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn common_point_examples() {
        let tol = Tolerance::default();
        let q = discs_common_point(&[disc(0., 0., 1.), disc(1., 0., 1.)], &tol).unwrap();
        assert!(q.norm() <= 1.0 + 1e-9 && q.dist(p(1., 0.)) <= 1.0 + 1e-9);
        assert!(discs_common_point(&[disc(0., 0., 1.), disc(3., 0., 1.)], &tol).is_none());
        let three = [disc(0., 0., 1.), disc(2., 0., 1.), disc(1., 1.5, 1.)];
        assert!(discs_common_point(&three, &tol).is_none());
        // Nested discs: the inner centre is the witness.
        let nested = [disc(0., 0., 5.), disc(1., 1., 0.5)];
        assert!(close(discs_common_point(&nested, &tol).unwrap(), p(1., 1.)));
    }

    #[test]
    fn closest_and_farthest_examples() {
        let tol = Tolerance::default();
        assert!(close(closest_point_in_disc(p(3., 0.), &disc(0., 0., 1.)), p(1., 0.)));
        assert!(close(closest_point_in_disc(p(0.2, 0.), &disc(0., 0., 1.)), p(0.2, 0.)));
        assert!(close(closest_point_in_disc(p(0., 2.), &disc(0., 0., 0.5)), p(0., 0.5)));
        let f = farthest_point_in_disc(p(3., 0.), &disc(0., 0., 1.), &tol);
        assert!(close(f, p(-1., 0.)));
        assert!((f.dist(p(3., 0.)) - 4.0).abs() < 1e-12);
        assert!(close(
            farthest_point_in_disc(p(0., 2.), &disc(0., 0., 1.), &tol),
            p(0., -1.)
        ));
        assert!(close(
            farthest_point_in_disc(p(0., 0.), &disc(0., 0., 1.), &tol),
            p(1., 0.)
        ));
    }

    #[test]
    fn disjointness_flag() {
        let tol = Tolerance::default();
        assert!(pairwise_disjoint(&[disc(0., 0., 1.), disc(3., 0., 1.)], &tol));
        assert!(!pairwise_disjoint(&[disc(0., 0., 1.), disc(2., 0., 1.)], &tol));
        assert_eq!(
            first_overlapping_pair(&[disc(0., 0., 1.), disc(9., 0., 1.), disc(1., 0., 1.)], &tol),
            Some((0, 2))
        );
    }

    #[test]
    fn tolerance_validation() {
        assert!(Tolerance::with_eps(0.0).is_err());
        assert!(Tolerance::with_eps(1e-7).is_ok());
    }
}
