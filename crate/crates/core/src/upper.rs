//! Tight upper bound `h_max` through the inverted additive Voronoi diagram
//! of the Q side.
//!
//! The diagram assigns every plane point `x` to the disc whose farthest point
//! is closest, i.e. it is the lower envelope of `|x - c| + r` over the discs.
//! It is never built explicitly: for each host disc on the P side we
//! enumerate the three kinds of locally optimal placements (diagram vertices
//! inside the host, diagram edges crossing the host boundary, and the
//! boundary point antipodal to the site owning the host centre) and keep
//! the best one.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{farthest_point_in_disc, validate_discs, Disc, Point, Tolerance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlacementKind {
    /// Three sites share the minimal augmented distance.
    Vertex { sites: [usize; 3] },
    /// Two sites share the minimal augmented distance on the host boundary.
    EdgeCrossing { sites: [usize; 2] },
    /// Boundary point opposite to the site that owns the host centre.
    Antipodal { site: usize },
}

impl PlacementKind {
    fn rank(&self) -> u8 {
        match self {
            PlacementKind::Vertex { .. } => 0,
            PlacementKind::EdgeCrossing { .. } => 1,
            PlacementKind::Antipodal { .. } => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidatePlacement {
    pub location: Point,
    pub kind: PlacementKind,
    /// Augmented value at `location`.
    pub value: f64,
}

impl CandidatePlacement {
    fn order_key(&self, other: &Self) -> Ordering {
        self.kind
            .rank()
            .cmp(&other.kind.rank())
            .then_with(|| self.location.lex_cmp(&other.location))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UpperBoundResult {
    pub value: f64,
    /// Index of the P element that realises the bound.
    pub critical_index: usize,
    pub placement: CandidatePlacement,
    pub witness_p: Vec<Point>,
    pub witness_q: Vec<Point>,
}

/// Minimum over the discs of the distance to the disc's farthest point,
/// with the index of the minimising disc (lowest index on ties).
pub fn augmented_value(x: Point, q: &[Disc]) -> Result<(f64, usize)> {
    if q.is_empty() {
        return Err(Error::invalid("disc set is empty"));
    }
    Ok(augmented_min(x, q.iter().enumerate()))
}

fn augmented_min<'a>(x: Point, sites: impl Iterator<Item = (usize, &'a Disc)>) -> (f64, usize) {
    let mut best = (f64::INFINITY, usize::MAX);
    for (i, d) in sites {
        let v = x.dist(d.centre) + d.radius;
        if v < best.0 {
            best = (v, i);
        }
    }
    best
}

/// Sites that can own some point of `host`: their smallest possible value
/// over the host does not exceed the largest possible envelope value.
fn relevant_sites(host: &Disc, q: &[Disc], tol: &Tolerance) -> Vec<usize> {
    let centre_dist: Vec<f64> = q.iter().map(|d| d.centre.dist(host.centre)).collect();
    let ceiling = q
        .iter()
        .zip(&centre_dist)
        .map(|(d, cd)| cd + host.radius + d.radius)
        .fold(f64::INFINITY, f64::min);
    q.iter()
        .zip(&centre_dist)
        .enumerate()
        .filter(|(_, (d, cd))| (*cd - host.radius).max(0.0) + d.radius <= ceiling + tol.eps_predicate)
        .map(|(i, _)| i)
        .collect()
}

/// Every locally optimal placement of a point inside `host`.
pub fn enumerate_candidate_placements(host: &Disc, q: &[Disc], tol: &Tolerance) -> Vec<CandidatePlacement> {
    if q.is_empty() {
        return Vec::new();
    }
    let sites = relevant_sites(host, q, tol);
    let mut out = Vec::new();
    if host.radius > tol.eps_predicate {
        vertex_candidates(host, q, &sites, tol, &mut out);
        crossing_candidates(host, q, &sites, tol, &mut out);
    }
    let (_, owner) = augmented_min(host.centre, sites.iter().map(|&i| (i, &q[i])));
    let location = farthest_point_in_disc(q[owner].centre, host, tol);
    let (value, _) = augmented_min(location, sites.iter().map(|&i| (i, &q[i])));
    out.push(CandidatePlacement {
        location,
        kind: PlacementKind::Antipodal { site: owner },
        value,
    });
    out
}

fn vertex_candidates(host: &Disc, q: &[Disc], sites: &[usize], tol: &Tolerance, out: &mut Vec<CandidatePlacement>) {
    let eps = tol.eps_predicate;
    for (a, &i) in sites.iter().enumerate() {
        for (b, &j) in sites.iter().enumerate().skip(a + 1) {
            for &k in &sites[b + 1..] {
                for (location, t) in equal_augmented_points(&q[i], &q[j], &q[k]) {
                    if !host.contains(location, tol) {
                        continue;
                    }
                    let (value, _) = augmented_min(location, sites.iter().map(|&s| (s, &q[s])));
                    if value < t - eps * (1.0 + t) {
                        continue;
                    }
                    out.push(CandidatePlacement {
                        location,
                        kind: PlacementKind::Vertex { sites: [i, j, k] },
                        value,
                    });
                }
            }
        }
    }
}

/// Points `x` with `|x - c| + r` equal for the three discs, paired with the
/// common value `t`.
///
/// Writing `|x - c_s| = t - r_s` and subtracting the squared equations
/// pairwise leaves two equations linear in `(x, y, t)`. Their solution line
/// is substituted back into the first squared equation, giving a quadratic.
fn equal_augmented_points(di: &Disc, dj: &Disc, dk: &Disc) -> Vec<(Point, f64)> {
    let origin = di.centre;
    let row = |d: &Disc| {
        let off = d.centre - origin;
        let coeffs = [2.0 * off.x, 2.0 * off.y, -2.0 * (d.radius - di.radius)];
        let rhs = off.dot(off) - (d.radius * d.radius - di.radius * di.radius);
        (coeffs, rhs)
    };
    let (a1, b1) = row(dj);
    let (a2, b2) = row(dk);
    let dot = |u: &[f64; 3], v: &[f64; 3]| u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    let n = [
        a1[1] * a2[2] - a1[2] * a2[1],
        a1[2] * a2[0] - a1[0] * a2[2],
        a1[0] * a2[1] - a1[1] * a2[0],
    ];
    let g11 = dot(&a1, &a1);
    let g22 = dot(&a2, &a2);
    let g12 = dot(&a1, &a2);
    let det = g11 * g22 - g12 * g12;
    if det <= 1e-24 * g11 * g22 || det <= 0.0 {
        return Vec::new();
    }
    let l1 = (g22 * b1 - g12 * b2) / det;
    let l2 = (g11 * b2 - g12 * b1) / det;
    let z0 = [
        l1 * a1[0] + l2 * a2[0],
        l1 * a1[1] + l2 * a2[1],
        l1 * a1[2] + l2 * a2[2],
    ];
    let w0 = z0[2] - di.radius;
    let qa = n[0] * n[0] + n[1] * n[1] - n[2] * n[2];
    let qb = 2.0 * (z0[0] * n[0] + z0[1] * n[1] - w0 * n[2]);
    let qc = z0[0] * z0[0] + z0[1] * z0[1] - w0 * w0;
    let scale = n[0].abs().max(n[1].abs()).max(n[2].abs()).powi(2);
    let mut roots = Vec::with_capacity(2);
    if qa.abs() <= 1e-14 * scale {
        if qb != 0.0 {
            roots.push(-qc / qb);
        }
    } else {
        let disc = qb * qb - 4.0 * qa * qc;
        if disc < 0.0 {
            return Vec::new();
        }
        let sq = disc.sqrt();
        // Numerically stable pair of roots.
        let m = -0.5 * (qb + qb.signum() * sq);
        if m != 0.0 {
            roots.push(m / qa);
            roots.push(qc / m);
        } else {
            roots.push(0.0);
        }
    }
    let t_min = di.radius.max(dj.radius).max(dk.radius);
    roots
        .into_iter()
        .filter_map(|s| {
            let t = z0[2] + s * n[2];
            let x = origin + Point::new(z0[0] + s * n[0], z0[1] + s * n[1]);
            let slack = 1e-9 * (1.0 + t.abs());
            (t.is_finite() && t >= t_min - slack && x.is_finite()).then_some((x, t))
        })
        .collect()
}

fn crossing_candidates(host: &Disc, q: &[Disc], sites: &[usize], tol: &Tolerance, out: &mut Vec<CandidatePlacement>) {
    if sites.len() < 2 {
        return;
    }
    let owner_at = |angle: f64| augmented_min(host.boundary_at(angle), sites.iter().map(|&s| (s, &q[s]))).1;
    let n = tol.boundary_samples.max(3);
    let step = std::f64::consts::TAU / n as f64;
    let owners: Vec<usize> = (0..n).map(|k| owner_at(k as f64 * step)).collect();
    let mut found = Vec::new();
    for k in 0..n {
        let (a, b) = (owners[k], owners[(k + 1) % n]);
        if a != b {
            let lo = k as f64 * step;
            refine_crossing(lo, lo + step, a, b, &owner_at, tol.eps_root, 0, &mut found);
        }
    }
    for (angle, a, b) in found {
        let location = host.boundary_at(angle);
        let (value, _) = augmented_min(location, sites.iter().map(|&s| (s, &q[s])));
        out.push(CandidatePlacement {
            location,
            kind: PlacementKind::EdgeCrossing {
                sites: [a.min(b), a.max(b)],
            },
            value,
        });
    }
}

/// Bisects an angular interval whose end points have different owners down
/// to `width`, splitting when a third owner shows up in between.
#[allow(clippy::too_many_arguments)]
fn refine_crossing(
    mut lo: f64,
    mut hi: f64,
    a: usize,
    b: usize,
    owner_at: &impl Fn(f64) -> usize,
    width: f64,
    depth: usize,
    found: &mut Vec<(f64, usize, usize)>,
) {
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        let c = owner_at(mid);
        if c == a {
            lo = mid;
        } else if c == b {
            hi = mid;
        } else {
            if depth < 64 {
                refine_crossing(lo, mid, a, c, owner_at, width, depth + 1, found);
                refine_crossing(mid, hi, c, b, owner_at, width, depth + 1, found);
            }
            return;
        }
    }
    found.push((0.5 * (lo + hi), a, b));
}

/// Best placement within one host: highest value, ties broken by kind order
/// and then lexicographic location.
fn best_in_host(candidates: &mut [CandidatePlacement], tol: &Tolerance) -> CandidatePlacement {
    candidates.sort_by(|a, b| a.order_key(b));
    let mut best = candidates[0];
    for c in candidates.iter().skip(1) {
        if c.value > best.value + tol.eps_predicate {
            best = *c;
        }
    }
    best
}

/// Tight upper bound `h_max(P, Q)` where both sides are given as discs;
/// precise points are discs of radius zero.
pub fn hmax(p: &[Disc], q: &[Disc], tol: &Tolerance) -> Result<UpperBoundResult> {
    validate_discs(p)?;
    validate_discs(q)?;
    tol.validate()?;
    let per_host: Vec<CandidatePlacement> = p
        .par_iter()
        .map(|host| {
            let mut cands = enumerate_candidate_placements(host, q, tol);
            best_in_host(&mut cands, tol)
        })
        .collect();
    let mut critical_index = 0;
    for (i, c) in per_host.iter().enumerate().skip(1) {
        if c.value > per_host[critical_index].value + tol.eps_predicate {
            critical_index = i;
        }
    }
    let placement = per_host[critical_index];
    let witness_q = q
        .iter()
        .map(|d| farthest_point_in_disc(placement.location, d, tol))
        .collect();
    let mut witness_p: Vec<Point> = p.iter().map(|d| d.centre).collect();
    witness_p[critical_index] = placement.location;
    Ok(UpperBoundResult {
        value: placement.value,
        critical_index,
        placement,
        witness_p,
        witness_q,
    })
}

/// `h_max(P, Q~)` for a precise P side.
pub fn hmax_precise_p(p: &[Point], q: &[Disc], tol: &Tolerance) -> Result<UpperBoundResult> {
    let lifted: Vec<Disc> = p.iter().map(|&x| Disc::point(x)).collect();
    hmax(&lifted, q, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::directed_hausdorff;

    fn disc(x: f64, y: f64, r: f64) -> Disc {
        Disc::new(Point::new(x, y), r)
    }

    #[test]
    fn augmented_value_examples() {
        let (v, i) = augmented_value(Point::new(0., 0.), &[disc(4., 0., 1.)]).unwrap();
        assert_eq!((v, i), (5.0, 0));
        let (v, i) = augmented_value(Point::new(0., 1.), &[disc(4., 0., 1.), disc(-4., 0., 1.)]).unwrap();
        assert!((v - (17f64.sqrt() + 1.0)).abs() < 1e-12);
        assert_eq!(i, 0);
        let (v, i) = augmented_value(Point::new(2., 3.), &[disc(2., 3., 0.7)]).unwrap();
        assert!((v - 0.7).abs() < 1e-15);
        assert_eq!(i, 0);
        assert!(augmented_value(Point::new(0., 0.), &[]).is_err());
    }

    #[test]
    fn equal_radius_vertex_is_circumcentre() {
        let tol = Tolerance::default();
        let q = [disc(0., 0., 0.5), disc(2., 0., 0.5), disc(0., 2., 0.5)];
        let c = enumerate_candidate_placements(&disc(1., 1., 0.3), &q, &tol);
        assert!(c
            .iter()
            .any(|c| matches!(c.kind, PlacementKind::Vertex { sites: [0, 1, 2] })
                && c.location.dist(Point::new(1., 1.)) < 1e-9));
    }

    #[test]
    fn symmetric_pair_crosses_on_the_axis() {
        let tol = Tolerance::default();
        let q = [disc(4., 0., 1.), disc(-4., 0., 1.)];
        let c = enumerate_candidate_placements(&disc(0., 0., 1.), &q, &tol);
        let crossings: Vec<_> = c
            .iter()
            .filter(|c| matches!(c.kind, PlacementKind::EdgeCrossing { sites: [0, 1] }))
            .collect();
        assert_eq!(crossings.len(), 2);
        for target in [Point::new(0., 1.), Point::new(0., -1.)] {
            let hit = crossings.iter().find(|c| c.location.dist(target) < 1e-9).unwrap();
            assert!((hit.value - (17f64.sqrt() + 1.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn single_site_gives_single_antipodal() {
        let tol = Tolerance::default();
        let c = enumerate_candidate_placements(&disc(0., 0., 1.), &[disc(3., 0., 0.5)], &tol);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].kind, PlacementKind::Antipodal { site: 0 });
        assert!(c[0].location.dist(Point::new(-1., 0.)) < 1e-12);
        assert!((c[0].value - 4.5).abs() < 1e-12);
    }

    #[test]
    fn hmax_examples() {
        let tol = Tolerance::default();
        let r = hmax(&[disc(0., 0., 1.)], &[disc(4., 0., 1.)], &tol).unwrap();
        assert!((r.value - 6.0).abs() < 1e-12);
        assert!(r.witness_p[0].dist(Point::new(-1., 0.)) < 1e-12);
        assert!(r.witness_q[0].dist(Point::new(5., 0.)) < 1e-12);

        let r = hmax_precise_p(&[Point::new(0., 0.)], &[disc(3., 0., 1.)], &tol).unwrap();
        assert!((r.value - 4.0).abs() < 1e-12);

        let r = hmax(&[disc(0., 0., 1.)], &[disc(2., 0., 0.), disc(-2., 0., 0.)], &tol).unwrap();
        assert!((r.value - 5f64.sqrt()).abs() < 1e-9);
        assert!(r.witness_p[0].x.abs() < 1e-9 && (r.witness_p[0].y.abs() - 1.0).abs() < 1e-9);
        let h = directed_hausdorff(&r.witness_p, &r.witness_q).unwrap();
        assert!((h - r.value).abs() < 1e-9);
    }

    #[test]
    fn hmax_rejects_empty_sides() {
        let tol = Tolerance::default();
        assert!(hmax(&[], &[disc(0., 0., 1.)], &tol).is_err());
        assert!(hmax(&[disc(0., 0., 1.)], &[], &tol).is_err());
    }

    #[test]
    fn collinear_centres_with_distinct_radii_still_meet() {
        // Three collinear sites: the envelope vertex exists off the line.
        let q = [disc(0., 0., 0.2), disc(2., 0., 0.9), disc(4., 0., 0.1)];
        let pts = equal_augmented_points(&q[0], &q[1], &q[2]);
        for (x, t) in pts {
            for d in &q {
                assert!((x.dist(d.centre) + d.radius - t).abs() < 1e-9);
            }
        }
    }
}
