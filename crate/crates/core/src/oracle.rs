//! Brute-force references for small instances.
//!
//! Two independent routes: an exact search over assignments of points to
//! discs, and sampled brackets that rely only on the distance being
//! 1-Lipschitz in every point.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{discs_common_point, nearest_distance, validate_discs, validate_points, Disc, Point, Tolerance};
use crate::lower_exact::candidate_values;

/// Largest instance accepted by [`oracle_hmin_exact`].
pub const EXACT_MAX_POINTS: usize = 6;
pub const EXACT_MAX_DISCS: usize = 3;
/// Work limit for the sampled brackets.
pub const SAMPLE_BUDGET: f64 = 1e7;

/// Closed interval known to contain the true value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bracket {
    pub lower: f64,
    pub upper: f64,
    /// Covering radius of the samples.
    pub resolution: f64,
}

impl Bracket {
    pub fn contains(&self, v: f64, slack: f64) -> bool {
        self.lower - slack <= v && v <= self.upper + slack
    }
}

/// Grid of pitch `step` clipped to the disc plus evenly spaced boundary
/// points. Every point of the disc lies within `step` of a sample.
pub fn sample_disc(d: &Disc, step: f64) -> Vec<Point> {
    assert!(step > 0.0, "sampling step must be positive");
    if d.radius <= 0.0 {
        return vec![d.centre];
    }
    let n = (d.radius / step).floor() as i64;
    let mut out = Vec::new();
    for i in -n..=n {
        for j in -n..=n {
            let off = Point::new(i as f64 * step, j as f64 * step);
            if off.norm() <= d.radius {
                out.push(d.centre + off);
            }
        }
    }
    out.extend(sample_boundary(d, step));
    out
}

/// `ceil(2 pi r / step)` evenly spaced boundary points.
pub fn sample_boundary(d: &Disc, step: f64) -> Vec<Point> {
    if d.radius <= 0.0 {
        return vec![d.centre];
    }
    let k = boundary_count(d, step);
    (0..k)
        .map(|i| d.boundary_at(std::f64::consts::TAU * i as f64 / k as f64))
        .collect()
}

/// Exact `h_min(P, Q~)` by trying every assignment of points to discs at
/// each candidate value in ascending order.
pub fn oracle_hmin_exact(p: &[Point], q: &[Disc], tol: &Tolerance) -> Result<f64> {
    validate_points(p)?;
    validate_discs(q)?;
    if p.len() > EXACT_MAX_POINTS || q.len() > EXACT_MAX_DISCS {
        return Err(Error::BudgetExceeded(format!(
            "exact oracle handles at most {EXACT_MAX_POINTS} points and {EXACT_MAX_DISCS} discs"
        )));
    }
    for c in candidate_values(p, q, tol) {
        if assignment_exists(p, q, c.value, tol) {
            return Ok(c.value);
        }
    }
    Err(Error::Invariant("no candidate value is feasible".into()))
}

/// Whether every point can be assigned a disc so that each disc meets the
/// radius-`d` discs of all points assigned to it.
pub fn assignment_exists(p: &[Point], q: &[Disc], d: f64, tol: &Tolerance) -> bool {
    let mut groups: Vec<Vec<Disc>> = q.iter().map(|disc| vec![*disc]).collect();
    assign(0, p, d, &mut groups, tol)
}

fn assign(next: usize, p: &[Point], d: f64, groups: &mut [Vec<Disc>], tol: &Tolerance) -> bool {
    if next == p.len() {
        return true;
    }
    let c = Disc::new(p[next], d);
    for j in 0..groups.len() {
        groups[j].push(c);
        if discs_common_point(&groups[j], tol).is_some() && assign(next + 1, p, d, groups, tol) {
            groups[j].pop();
            return true;
        }
        groups[j].pop();
    }
    false
}

fn samples(discs: &[Disc], step: f64) -> Vec<Vec<Point>> {
    discs.iter().map(|d| sample_disc(d, step)).collect()
}

fn imprecise(discs: &[Disc]) -> bool {
    discs.iter().any(|d| d.radius > 0.0)
}

fn check_step(step: f64) -> Result<()> {
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::invalid("sampling step must be positive"));
    }
    Ok(())
}

fn over_budget(work: f64, what: &str) -> Result<()> {
    if work > SAMPLE_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "{work:.0} {what} exceeds {SAMPLE_BUDGET:.0}"
        )));
    }
    Ok(())
}

/// Sampled bracket for `h_min`. Precise sides are discs of radius zero.
///
/// The grid value is the minimum of `h` over every combination of samples.
/// With a precise `P` it is evaluated per assignment of points to discs,
/// which gives the same minimum without enumerating the product.
pub fn oracle_hmin_bracket(p: &[Disc], q: &[Disc], step: f64) -> Result<Bracket> {
    validate_discs(p)?;
    validate_discs(q)?;
    check_step(step)?;
    let qs = samples(q, step);
    let grid_min = if imprecise(p) {
        let ps = samples(p, step);
        let realisations: f64 = qs.iter().map(|s| s.len() as f64).product();
        let per: f64 = ps.iter().map(|s| s.len() as f64).sum::<f64>() * q.len() as f64;
        over_budget(realisations * per, "sampled distance evaluations")?;
        hmin_grid_by_realisation(&ps, &qs)
    } else {
        let pts: Vec<Point> = p.iter().map(|d| d.centre).collect();
        hmin_grid_by_assignment(&pts, &qs)?
    };
    let sides = imprecise(p) as u8 + imprecise(q) as u8;
    let slack = step * sides as f64;
    Ok(Bracket {
        lower: (grid_min - slack).max(0.0),
        upper: grid_min,
        resolution: step,
    })
}

fn hmin_grid_by_realisation(ps: &[Vec<Point>], qs: &[Vec<Point>]) -> f64 {
    // For a fixed Q the best P is chosen independently per disc.
    let value_for = |qr: &[Point]| {
        ps.iter()
            .map(|s| s.iter().map(|&x| nearest_distance(x, qr)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    let total: usize = qs.iter().map(Vec::len).product();
    (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let qr: Vec<Point> = qs
                .iter()
                .map(|s| {
                    let pick = s[idx % s.len()];
                    idx /= s.len();
                    pick
                })
                .collect();
            value_for(&qr)
        })
        .reduce(|| f64::INFINITY, f64::min)
}

/// `min over y of max_p |p - y_sigma(p)|` for every assignment `sigma`,
/// using the best sample of each disc for each subset of points.
fn hmin_grid_by_assignment(p: &[Point], qs: &[Vec<Point>]) -> Result<f64> {
    let m = p.len();
    let n = qs.len();
    if m > 20 {
        return Err(Error::BudgetExceeded(format!("{m} precise points")));
    }
    let subsets = 1usize << m;
    let samples: f64 = qs.iter().map(|s| s.len() as f64).sum();
    over_budget(samples * subsets as f64, "sample-subset evaluations")?;
    over_budget((n as f64).powi(m as i32), "assignments")?;
    // cost[j][mask]: squared radius needed for one sample of disc j to
    // reach every point in mask.
    let cost: Vec<Vec<f64>> = qs
        .par_iter()
        .map(|s| {
            let mut best = vec![f64::INFINITY; subsets];
            best[0] = 0.0;
            let mut far = vec![0.0; subsets];
            for &y in s {
                for mask in 1..subsets {
                    let low = mask.trailing_zeros() as usize;
                    far[mask] = f64::max(far[mask & (mask - 1)], p[low].dist_sq(y));
                    best[mask] = best[mask].min(far[mask]);
                }
            }
            best
        })
        .collect();
    let mut best = f64::INFINITY;
    let mut masks = vec![0usize; n];
    let assignments = n.pow(m as u32);
    for mut code in 0..assignments {
        masks.iter_mut().for_each(|x| *x = 0);
        for i in 0..m {
            masks[code % n] |= 1 << i;
            code /= n;
        }
        let v = (0..n).map(|j| cost[j][masks[j]]).fold(0.0, f64::max);
        best = best.min(v);
    }
    Ok(best.sqrt())
}

/// Largest squared distance from `x` to the `k` evenly spaced boundary
/// samples of `d`. Distance grows with the angular offset from the
/// direction pointing away from `x`, so only the two samples around that
/// direction need checking.
fn farthest_sample_sq(x: Point, d: &Disc, k: usize) -> f64 {
    if d.radius <= 0.0 {
        return x.dist_sq(d.centre);
    }
    let away = d.centre - x;
    if away.norm() == 0.0 {
        return d.radius * d.radius;
    }
    let angle = away.y.atan2(away.x).rem_euclid(std::f64::consts::TAU);
    let slot = angle / (std::f64::consts::TAU / k as f64);
    let lo = slot.floor() as usize;
    [lo % k, (lo + 1) % k]
        .iter()
        .map(|&i| x.dist_sq(d.boundary_at(std::f64::consts::TAU * i as f64 / k as f64)))
        .fold(0.0, f64::max)
}

fn boundary_count(d: &Disc, step: f64) -> usize {
    ((std::f64::consts::TAU * d.radius / step).ceil() as usize).max(3)
}

/// Sampled bracket for `h_max`. Precise sides are discs of radius zero.
///
/// For a fixed sample `x` of `P`, every disc of `Q` independently moves to
/// its boundary sample farthest from `x`; the grid value is the maximum of
/// that over all samples of `P`.
pub fn oracle_hmax_bracket(p: &[Disc], q: &[Disc], step: f64) -> Result<Bracket> {
    validate_discs(p)?;
    validate_discs(q)?;
    check_step(step)?;
    let ps = samples(p, step);
    let evals = ps.iter().map(|s| s.len() as f64).sum::<f64>() * q.len() as f64;
    over_budget(evals, "sample-disc evaluations")?;
    let counts: Vec<usize> = q.iter().map(|d| boundary_count(d, step)).collect();
    let grid_max = ps
        .par_iter()
        .flat_map_iter(|s| s.iter().copied())
        .map(|x| {
            q.iter()
                .zip(&counts)
                .map(|(d, &k)| farthest_sample_sq(x, d, k))
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| 0.0, f64::max)
        .sqrt();
    let sides = imprecise(p) as u8 + imprecise(q) as u8;
    Ok(Bracket {
        lower: grid_max,
        upper: grid_max + step * sides as f64,
        resolution: step,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn disc(x: f64, y: f64, r: f64) -> Disc {
        Disc::new(pt(x, y), r)
    }

    #[test]
    fn sampling_examples() {
        assert_eq!(sample_disc(&disc(0., 0., 0.), 0.3), vec![pt(0., 0.)]);
        let s = sample_disc(&disc(0., 0., 1.), 1.0);
        assert!(s.contains(&pt(0., 0.)));
        assert!(s.iter().filter(|p| (p.norm() - 1.0).abs() < 1e-12).count() >= 7);
    }

    #[test]
    fn exact_oracle_examples() {
        let tol = Tolerance::default();
        let v = oracle_hmin_exact(&[pt(0., 0.), pt(2., 0.)], &[disc(1., 5., 1.)], &tol).unwrap();
        assert!((v - 17f64.sqrt()).abs() < 1e-9);
        let v = oracle_hmin_exact(
            &[pt(1.05, 0.), pt(1.95, 0.)],
            &[disc(0., 0., 1.), disc(3., 0., 1.)],
            &tol,
        )
        .unwrap();
        assert!((v - 0.05).abs() < 1e-9);
        assert_eq!(
            oracle_hmin_exact(&[pt(0.2, 0.1)], &[disc(0., 0., 1.)], &tol).unwrap(),
            0.0
        );
        let many: Vec<Point> = (0..7).map(|i| pt(i as f64, 0.)).collect();
        assert!(matches!(
            oracle_hmin_exact(&many, &[disc(0., 0., 1.)], &tol),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn bracket_examples() {
        let b = oracle_hmin_bracket(&[disc(0., 0., 0.), disc(2., 0., 0.)], &[disc(1., 0., 5.)], 0.05).unwrap();
        assert!(b.contains(1.0, 1e-12), "{b:?}");
        let b = oracle_hmax_bracket(&[disc(0., 0., 1.)], &[disc(4., 0., 1.)], 0.05).unwrap();
        assert!(b.contains(6.0, 1e-12), "{b:?}");
        let b = oracle_hmax_bracket(&[disc(0., 0., 1.)], &[disc(4., 0., 1.), disc(-4., 0., 1.)], 0.05).unwrap();
        assert!(b.contains(17f64.sqrt() + 1.0, 1e-12), "{b:?}");
        let precise_p = [disc(0., 0., 0.), disc(3., 1., 0.)];
        let precise_q = [disc(1., 0., 0.)];
        let b = oracle_hmin_bracket(&precise_p, &precise_q, 0.1).unwrap();
        assert_eq!((b.lower, b.upper), (b.upper, 5f64.sqrt()));
        let b = oracle_hmax_bracket(&precise_p, &precise_q, 0.1).unwrap();
        assert_eq!((b.lower, b.upper), (5f64.sqrt(), 5f64.sqrt()));
    }

    #[test]
    fn bracket_budget_guard() {
        let q = [disc(0., 0., 1.), disc(5., 0., 1.), disc(10., 0., 1.)];
        assert!(matches!(
            oracle_hmin_bracket(&[disc(0., 0., 1.)], &q, 0.01),
            Err(Error::BudgetExceeded(_))
        ));
        let many: Vec<Disc> = (0..30).map(|i| disc(i as f64, 0., 0.)).collect();
        assert!(matches!(
            oracle_hmin_bracket(&many, &q, 0.5),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn assignment_route_matches_realisation_product() {
        let p = [pt(0., 0.), pt(2., 0.5), pt(1., 3.)];
        let q = [disc(1., 1., 0.6), disc(3., 2., 0.4)];
        let qs = samples(&q, 0.15);
        let ps: Vec<Vec<Point>> = p.iter().map(|&x| vec![x]).collect();
        let a = hmin_grid_by_assignment(&p, &qs).unwrap();
        let b = hmin_grid_by_realisation(&ps, &qs);
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn farthest_sample_lookup_matches_scan() {
        let d = disc(0.3, -0.2, 1.3);
        let k = boundary_count(&d, 0.05);
        let ring = sample_boundary(&d, 0.05);
        for x in [pt(5., 1.), pt(-2., -3.), pt(0.3, -0.2), pt(0.5, 0.), pt(0.3, 4.)] {
            let scan = ring.iter().map(|&y| x.dist_sq(y)).fold(0.0, f64::max);
            assert!((farthest_sample_sq(x, &d, k) - scan).abs() < 1e-12);
        }
    }
}
