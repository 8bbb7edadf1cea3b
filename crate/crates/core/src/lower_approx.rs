//! Approximations of `h_min(P, Q~)`.
//!
//! The grown-discs decision grows every disc by `d`, groups the points of P
//! by the set of grown discs containing them, covers each group with
//! k-centre circles, and matches circles to discs. Plugging in a
//! `c`-approximate k-centre routine yields a `(c + 2)`-approximation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    centres, circle_circle_intersections, closest_point_in_disc, directed_hausdorff, max_radius, min_radius,
    pairwise_disjoint, validate_discs, validate_points, CircleIntersection, Disc, Point, Tolerance,
};
use crate::lower_exact::{candidate_values, independent_sets, IndependentSetsOutcome};
use crate::matching::maximum_matching;

/// Places every imprecise point at its disc centre.
pub fn centre_points(p: &[Point], q: &[Disc]) -> Result<f64> {
    validate_points(p)?;
    validate_discs(q)?;
    directed_hausdorff(p, &centres(q))
}

/// Greedy farthest-point k-centre. Returns the centres (all input points)
/// and the covering radius, which is at most twice the optimum.
pub fn gonzalez_k_centre(points: &[Point], k: usize) -> (Vec<Point>, f64) {
    if points.is_empty() || k == 0 {
        return (Vec::new(), if points.is_empty() { 0.0 } else { f64::INFINITY });
    }
    let mut chosen = vec![points[0]];
    let mut nearest: Vec<f64> = points.iter().map(|p| p.dist(points[0])).collect();
    while chosen.len() < k {
        let (far, &dist) =
            nearest.iter().enumerate().fold(
                (0, &f64::NEG_INFINITY),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            );
        if dist <= 0.0 {
            break;
        }
        let c = points[far];
        chosen.push(c);
        for (n, p) in nearest.iter_mut().zip(points) {
            *n = n.min(p.dist(c));
        }
    }
    let radius = nearest.iter().copied().fold(0.0, f64::max);
    (chosen, radius)
}

/// Exact decision for covering `points` with `k <= 4` circles of radius `d`.
///
/// Any cluster coverable at radius `d` has a centre at a point of the
/// cluster or at an intersection of two radius-`d` circles around points,
/// so trying all k-subsets of those candidates is exact.
pub fn exact_k_cover(points: &[Point], k: usize, d: f64, tol: &Tolerance) -> Result<Option<Vec<Point>>> {
    if k > 4 {
        return Err(Error::invalid(format!("exact cover supports k <= 4, got {k}")));
    }
    if points.is_empty() {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut cands: Vec<Point> = points.to_vec();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let (a, b) = (Disc::new(points[i], d), Disc::new(points[j], d));
            if let CircleIntersection::Points(v) = circle_circle_intersections(&a, &b, tol) {
                cands.extend(v);
            }
        }
    }
    let reach = d * (1.0 + tol.eps_predicate) + tol.eps_predicate;
    // Bit mask of points covered by each candidate.
    let masks: Vec<u128> = if points.len() <= 128 {
        cands
            .iter()
            .map(|c| {
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| p.dist(*c) <= reach)
                    .fold(0u128, |m, (i, _)| m | (1 << i))
            })
            .collect()
    } else {
        return Err(Error::invalid("exact cover supports at most 128 points"));
    };
    let full: u128 = if points.len() == 128 {
        u128::MAX
    } else {
        (1u128 << points.len()) - 1
    };
    let mut pick = Vec::with_capacity(k);
    if search_cover(&masks, full, 0, k, &mut pick) {
        let mut centres: Vec<Point> = pick.iter().map(|&i| cands[i]).collect();
        while centres.len() < k {
            centres.push(centres[0]);
        }
        return Ok(Some(centres));
    }
    Ok(None)
}

fn search_cover(masks: &[u128], full: u128, covered: u128, left: usize, pick: &mut Vec<usize>) -> bool {
    if covered == full {
        return true;
    }
    if left == 0 {
        return false;
    }
    // Some candidate has to cover the lowest uncovered point.
    let first = (!covered & full).trailing_zeros();
    for i in 0..masks.len() {
        if masks[i] & (1 << first) == 0 {
            continue;
        }
        pick.push(i);
        if search_cover(masks, full, covered | masks[i], left - 1, pick) {
            return true;
        }
        pick.pop();
    }
    false
}

/// Points of P sharing the same set of grown discs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellGroup {
    pub key: Vec<usize>,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellDecomposition {
    Groups(Vec<CellGroup>),
    /// This point lies in no grown disc.
    Uncovered {
        point: usize,
    },
}

/// Groups points by the index set of discs grown by `d` that contain them,
/// in lexicographic key order.
pub fn cell_decomposition(p: &[Point], q: &[Disc], d: f64, tol: &Tolerance) -> CellDecomposition {
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (pi, &x) in p.iter().enumerate() {
        let key: Vec<usize> = q
            .iter()
            .enumerate()
            .filter(|(_, disc)| disc.grown(d).contains(x, tol))
            .map(|(i, _)| i)
            .collect();
        if key.is_empty() {
            return CellDecomposition::Uncovered { point: pi };
        }
        groups.entry(key).or_default().push(pi);
    }
    CellDecomposition::Groups(
        groups
            .into_iter()
            .map(|(key, members)| CellGroup { key, members })
            .collect(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverRoutine {
    /// Greedy farthest point, factor 2.
    Gonzalez,
    /// Exhaustive cover for keys of at most four discs, factor 1.
    Exact,
}

impl CoverRoutine {
    pub fn factor(self) -> f64 {
        match self {
            CoverRoutine::Gonzalez => 2.0,
            CoverRoutine::Exact => 1.0,
        }
    }

    /// Centres of at most `k` circles of radius `factor * d` covering `points`.
    fn cover(self, points: &[Point], k: usize, d: f64, tol: &Tolerance) -> Result<Option<Vec<Point>>> {
        match self {
            CoverRoutine::Gonzalez => {
                let (centres, radius) = gonzalez_k_centre(points, k);
                let limit = 2.0 * d * (1.0 + tol.eps_predicate) + tol.eps_predicate;
                Ok((radius <= limit).then_some(centres))
            }
            CoverRoutine::Exact => exact_k_cover(points, k, d, tol),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CircleCover {
    pub centre: Point,
    pub radius: f64,
    pub cell_key: Vec<usize>,
    pub matched_disc: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrownDecision {
    pub feasible: bool,
    pub circles: Vec<CircleCover>,
    pub witness: Option<Vec<Point>>,
}

impl GrownDecision {
    fn infeasible(circles: Vec<CircleCover>) -> Self {
        GrownDecision {
            feasible: false,
            circles,
            witness: None,
        }
    }
}

/// Decision step: for a value `d` admitting a solution, returns a
/// realisation with distance at most `(c + 2) d`.
pub fn grown_discs_decide(
    p: &[Point],
    q: &[Disc],
    d: f64,
    routine: CoverRoutine,
    tol: &Tolerance,
) -> Result<GrownDecision> {
    validate_points(p)?;
    validate_discs(q)?;
    let c = routine.factor();
    let groups = match cell_decomposition(p, q, d, tol) {
        CellDecomposition::Uncovered { .. } => return Ok(GrownDecision::infeasible(Vec::new())),
        CellDecomposition::Groups(g) => g,
    };
    if routine == CoverRoutine::Exact {
        if let Some(g) = groups.iter().find(|g| g.key.len() > 4) {
            return Err(Error::Invariant(format!(
                "cell key {:?} has more than four discs at d = {d}",
                g.key
            )));
        }
    }
    // Circles cover what they reach at (c + 2) d before the move; if the
    // move then pushes some point out of reach, retry marking at (c + 1) d,
    // which the move can never break.
    let first = decide_with_marking(p, q, d, routine, &groups, c + 2.0, tol)?;
    if first.feasible {
        return Ok(first);
    }
    let second = decide_with_marking(p, q, d, routine, &groups, c + 1.0, tol)?;
    Ok(if second.feasible { second } else { first })
}

fn decide_with_marking(
    p: &[Point],
    q: &[Disc],
    d: f64,
    routine: CoverRoutine,
    groups: &[CellGroup],
    mark_factor: f64,
    tol: &Tolerance,
) -> Result<GrownDecision> {
    let c = routine.factor();
    let grown_radius = (c + 2.0) * d;
    let mark_radius = mark_factor * d * (1.0 + tol.eps_predicate) + tol.eps_predicate;
    let mut covered = vec![false; p.len()];
    let mut circles: Vec<CircleCover> = Vec::new();
    for group in groups {
        let open: Vec<Point> = group.members.iter().filter(|&&i| !covered[i]).map(|&i| p[i]).collect();
        if open.is_empty() {
            continue;
        }
        let mut found = None;
        for k in 1..=group.key.len() {
            if let Some(centres) = routine.cover(&open, k, d, tol)? {
                found = Some(centres);
                break;
            }
        }
        let Some(centres) = found else {
            return Ok(GrownDecision::infeasible(circles));
        };
        for centre in centres {
            for (i, x) in p.iter().enumerate() {
                if x.dist(centre) <= mark_radius {
                    covered[i] = true;
                }
            }
            circles.push(CircleCover {
                centre,
                radius: grown_radius,
                cell_key: group.key.clone(),
                matched_disc: None,
            });
        }
    }
    let adjacency: Vec<Vec<usize>> = circles.iter().map(|c| c.cell_key.clone()).collect();
    let matching = maximum_matching(&adjacency, q.len());
    if matching.iter().any(Option::is_none) {
        return Ok(GrownDecision::infeasible(circles));
    }
    let mut witness = centres(q);
    for (circle, disc) in circles.iter_mut().zip(&matching) {
        let disc = disc.expect("checked above");
        circle.centre = closest_point_in_disc(circle.centre, &q[disc]);
        circle.matched_disc = Some(disc);
        witness[disc] = circle.centre;
    }
    let achieved = directed_hausdorff(p, &witness)?;
    if achieved > grown_radius * (1.0 + tol.eps_predicate) + tol.eps_predicate {
        return Ok(GrownDecision::infeasible(circles));
    }
    Ok(GrownDecision {
        feasible: true,
        circles,
        witness: Some(witness),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproxResult {
    pub value: f64,
    /// 1 for an exact answer, otherwise the proven approximation factor.
    pub guarantee_factor: f64,
    pub witness_q: Vec<Point>,
    pub accepted_d: Option<f64>,
    pub algorithm: String,
}

/// Searches the candidate values for the smallest `d` accepted by the
/// grown-discs decision.
pub fn grown_discs(p: &[Point], q: &[Disc], routine: CoverRoutine, tol: &Tolerance) -> Result<ApproxResult> {
    let values: Vec<f64> = candidate_values(p, q, tol).into_iter().map(|c| c.value).collect();
    grown_discs_over(p, q, routine, &values, tol)?
        .ok_or_else(|| Error::Invariant("no candidate value was accepted".into()))
}

fn grown_discs_over(
    p: &[Point],
    q: &[Disc],
    routine: CoverRoutine,
    values: &[f64],
    tol: &Tolerance,
) -> Result<Option<ApproxResult>> {
    validate_points(p)?;
    validate_discs(q)?;
    let Some(&last) = values.last() else {
        return Ok(None);
    };
    let top = grown_discs_decide(p, q, last, routine, tol)?;
    if !top.feasible {
        return Ok(None);
    }
    let (mut lo, mut hi) = (0usize, values.len() - 1);
    let mut best = top;
    while lo < hi {
        let mid = (lo + hi) / 2;
        let dec = grown_discs_decide(p, q, values[mid], routine, tol)?;
        if dec.feasible {
            hi = mid;
            best = dec;
        } else {
            lo = mid + 1;
        }
    }
    let witness = best.witness.expect("feasible decisions carry a witness");
    let value = directed_hausdorff(p, &witness)?;
    Ok(Some(ApproxResult {
        value,
        guarantee_factor: routine.factor() + 2.0,
        witness_q: witness,
        accepted_d: Some(values[hi]),
        algorithm: match routine {
            CoverRoutine::Gonzalez => "grown-discs".into(),
            CoverRoutine::Exact => "grown-discs-exact-cover".into(),
        },
    }))
}

/// Best available bound for `h_min(P, Q~)`: exact below the small-distance
/// threshold of disjoint discs, a 3-approximation for disjoint discs of
/// equal radius, and a 4-approximation otherwise.
pub fn hmin_dispatch(p: &[Point], q: &[Disc], tol: &Tolerance) -> Result<ApproxResult> {
    validate_points(p)?;
    validate_discs(q)?;
    let disjoint = pairwise_disjoint(q, tol);
    if disjoint {
        if let IndependentSetsOutcome::Exact { value, witness } = independent_sets(p, q, tol)? {
            return Ok(ApproxResult {
                value,
                guarantee_factor: 1.0,
                witness_q: witness,
                accepted_d: Some(value),
                algorithm: "independent-sets".into(),
            });
        }
        let r = max_radius(q);
        if r - min_radius(q) <= tol.eps_predicate {
            return equal_disjoint(p, q, r, tol).map(|mut res| {
                res.guarantee_factor = 3.0;
                res
            });
        }
    }
    grown_discs(p, q, CoverRoutine::Gonzalez, tol)
}

fn equal_disjoint(p: &[Point], q: &[Disc], r: f64, tol: &Tolerance) -> Result<ApproxResult> {
    let centre_value = centre_points(p, q)?;
    let by_centres = ApproxResult {
        value: centre_value,
        guarantee_factor: 3.0,
        witness_q: centres(q),
        accepted_d: None,
        algorithm: "centre-points".into(),
    };
    // Centre placement is off by at most r, so above 1.5 r it is within 3x.
    if centre_value > 1.5 * r {
        return Ok(by_centres);
    }
    // If the optimum is at least r / 2, centre placement is again within 3x;
    // below r / 2 every cell lies in at most four grown discs.
    let values: Vec<f64> = candidate_values(p, q, tol)
        .into_iter()
        .map(|c| c.value)
        .filter(|&v| v < 0.5 * r)
        .collect();
    match grown_discs_over(p, q, CoverRoutine::Exact, &values, tol)? {
        Some(res) if res.value <= centre_value => Ok(res),
        _ => Ok(by_centres),
    }
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
    fn centre_points_examples() {
        assert_eq!(centre_points(&[pt(3., 0.)], &[disc(0., 0., 1.)]).unwrap(), 3.0);
        assert_eq!(
            centre_points(&[pt(2., 0.), pt(-2., 0.)], &[disc(0., 0., 1.)]).unwrap(),
            2.0
        );
        assert!(centre_points(&[], &[disc(0., 0., 1.)]).is_err());
    }

    #[test]
    fn gonzalez_examples() {
        let pts = [pt(0., 0.), pt(4., 0.), pt(0., 4.)];
        let (c, r) = gonzalez_k_centre(&pts, 3);
        assert_eq!((c.len(), r), (3, 0.0));
        let (c, r) = gonzalez_k_centre(&pts, 1);
        assert_eq!(c, vec![pt(0., 0.)]);
        assert_eq!(r, 4.0);
        let (c, r) = gonzalez_k_centre(&pts, 2);
        assert_eq!(c, vec![pt(0., 0.), pt(4., 0.)]);
        assert_eq!(r, 4.0);
    }

    #[test]
    fn exact_cover_examples() {
        let tol = Tolerance::default();
        let pts = [pt(0., 0.), pt(1., 0.)];
        let c = exact_k_cover(&pts, 1, 0.5, &tol).unwrap().unwrap();
        assert!(c[0].dist(pt(0.5, 0.)) < 1e-9);
        assert!(exact_k_cover(&pts, 1, 0.4, &tol).unwrap().is_none());
        assert!(exact_k_cover(&pts, 5, 1.0, &tol).is_err());
        let three = [pt(0., 0.), pt(1., 0.), pt(0., 0.)];
        assert!(exact_k_cover(&three, 2, 0.0, &tol).unwrap().is_some());
        let three = [pt(0., 0.), pt(1., 0.), pt(2., 0.)];
        assert!(exact_k_cover(&three, 2, 0.0, &tol).unwrap().is_none());
    }

    #[test]
    fn cell_decomposition_examples() {
        let tol = Tolerance::default();
        assert_eq!(
            cell_decomposition(&[pt(2., 0.)], &[disc(0., 0., 1.)], 1.0, &tol),
            CellDecomposition::Groups(vec![CellGroup {
                key: vec![0],
                members: vec![0]
            }])
        );
        assert_eq!(
            cell_decomposition(
                &[pt(1.1, 0.), pt(-0.5, 0.)],
                &[disc(0., 0., 1.), disc(2.2, 0., 1.)],
                0.2,
                &tol
            ),
            CellDecomposition::Groups(vec![
                CellGroup {
                    key: vec![0],
                    members: vec![1]
                },
                CellGroup {
                    key: vec![0, 1],
                    members: vec![0]
                },
            ])
        );
        assert_eq!(
            cell_decomposition(&[pt(5., 5.)], &[disc(0., 0., 1.)], 0.5, &tol),
            CellDecomposition::Uncovered { point: 0 }
        );
    }

    #[test]
    fn grown_decide_examples() {
        let tol = Tolerance::default();
        let q = [disc(0., 0., 1.)];
        let dec = grown_discs_decide(&[pt(2., 0.)], &q, 1.0, CoverRoutine::Gonzalez, &tol).unwrap();
        assert!(dec.feasible);
        assert!(dec.circles[0].centre.dist(pt(1., 0.)) < 1e-12);
        let w = dec.witness.unwrap();
        assert!((directed_hausdorff(&[pt(2., 0.)], &w).unwrap() - 1.0).abs() < 1e-12);

        let dec = grown_discs_decide(&[pt(2., 0.)], &q, 0.5, CoverRoutine::Gonzalez, &tol).unwrap();
        assert!(!dec.feasible);

        let two = [pt(2., 0.), pt(-2., 0.)];
        assert!(
            !grown_discs_decide(&two, &q, 1.0, CoverRoutine::Gonzalez, &tol)
                .unwrap()
                .feasible
        );
        let dec = grown_discs_decide(&two, &q, 2.0, CoverRoutine::Gonzalez, &tol).unwrap();
        assert!(dec.feasible);
        let w = dec.witness.unwrap();
        assert!(w[0].dist(pt(1., 0.)) < 1e-12);
        assert!((directed_hausdorff(&two, &w).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn grown_search_examples() {
        let tol = Tolerance::default();
        let q = [disc(0., 0., 1.)];
        let r = grown_discs(&[pt(2., 0.)], &q, CoverRoutine::Gonzalez, &tol).unwrap();
        assert_eq!(r.accepted_d, Some(1.0));
        assert!((r.value - 1.0).abs() < 1e-12);
        assert_eq!(r.guarantee_factor, 4.0);

        let r = grown_discs(&[pt(2., 0.), pt(-2., 0.)], &q, CoverRoutine::Gonzalez, &tol).unwrap();
        assert_eq!(r.accepted_d, Some(2.0));
        assert!((r.value - 3.0).abs() < 1e-12);
    }

    #[test]
    fn exact_cover_rejects_wide_cells() {
        let tol = Tolerance::default();
        let q: Vec<Disc> = (0..5).map(|i| disc(i as f64 * 0.1, 0., 1.)).collect();
        assert!(grown_discs_decide(&[pt(0., 0.)], &q, 0.1, CoverRoutine::Exact, &tol).is_err());
    }

    #[test]
    fn dispatch_examples() {
        let tol = Tolerance::default();
        let q = [disc(0., 0., 1.), disc(3., 0., 1.)];
        let r = hmin_dispatch(&[pt(1.05, 0.), pt(1.95, 0.)], &q, &tol).unwrap();
        assert_eq!(r.guarantee_factor, 1.0);
        assert!((r.value - 0.05).abs() < 1e-9);

        let r = hmin_dispatch(&[pt(10., 0.)], &[disc(0., 0., 1.)], &tol).unwrap();
        assert_eq!(r.guarantee_factor, 3.0);
        assert_eq!(r.value, 10.0);
    }
}
