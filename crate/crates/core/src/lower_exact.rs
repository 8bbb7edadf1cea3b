//! Exact tight lower bounds.
//!
//! * [`place_together`] solves `h_min(P~, Q)` in `O(mn)`.
//! * [`candidate_values`] lists every value `h_min(P, Q~)` can take.
//! * [`independent_sets`] solves `h_min(P, Q~)` exactly for pairwise
//!   disjoint discs when the answer is below [`SmallThreshold::value`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    closest_point_in_disc, directed_hausdorff, discs_common_point, first_overlapping_pair, min_radius, nearest,
    validate_discs, validate_points, Disc, Point, Tolerance,
};
use crate::matching::maximum_matching;

/// Places every imprecise point as close as possible to its nearest precise
/// point. Returns `h_min(P~, Q)` and the realisation attaining it.
pub fn place_together(p: &[Disc], q: &[Point]) -> Result<(f64, Vec<Point>)> {
    validate_discs(p)?;
    validate_points(q)?;
    let mut value: f64 = 0.0;
    let mut witness = Vec::with_capacity(p.len());
    for d in p {
        let (j, dist) = nearest(d.centre, q);
        value = value.max((dist - d.radius).max(0.0));
        witness.push(closest_point_in_disc(q[j], d));
    }
    Ok((value, witness))
}

/// What determines a candidate value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Provenance {
    OnePoint {
        p: usize,
        disc: usize,
    },
    TwoPoint {
        p: [usize; 2],
        disc: usize,
        location: Point,
    },
    ThreePoint {
        p: [usize; 3],
        disc: usize,
        circumcentre: Point,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidateValue {
    pub value: f64,
    pub provenance: Provenance,
}

/// Every value a single disc can realise as the constrained one-centre
/// radius of some subset of P, sorted ascending and deduplicated within
/// `eps_predicate`.
pub fn candidate_values(p: &[Point], q: &[Disc], tol: &Tolerance) -> Vec<CandidateValue> {
    let mut out = Vec::new();
    for (di, d) in q.iter().enumerate() {
        for (i, &a) in p.iter().enumerate() {
            out.push(CandidateValue {
                value: (a.dist(d.centre) - d.radius).max(0.0),
                provenance: Provenance::OnePoint { p: i, disc: di },
            });
        }
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                two_point_values(p, i, j, d, di, tol, &mut out);
                for k in j + 1..p.len() {
                    if let Some(c) = circumcentre(p[i], p[j], p[k]) {
                        if d.contains(c, tol) {
                            out.push(CandidateValue {
                                value: c.dist(p[i]),
                                provenance: Provenance::ThreePoint {
                                    p: [i, j, k],
                                    disc: di,
                                    circumcentre: c,
                                },
                            });
                        }
                    }
                }
            }
        }
    }
    out.retain(|c| c.value.is_finite());
    out.sort_by(|a, b| a.value.total_cmp(&b.value));
    let mut dedup: Vec<CandidateValue> = Vec::with_capacity(out.len());
    for c in out {
        match dedup.last() {
            Some(last) if c.value - last.value <= tol.eps_predicate => {}
            _ => dedup.push(c),
        }
    }
    dedup
}

fn two_point_values(
    p: &[Point],
    i: usize,
    j: usize,
    d: &Disc,
    di: usize,
    tol: &Tolerance,
    out: &mut Vec<CandidateValue>,
) {
    let (a, b) = (p[i], p[j]);
    let mid = (a + b).scale(0.5);
    let along = b - a;
    let len = along.norm();
    if len <= tol.eps_predicate {
        return;
    }
    let mut push = |location: Point| {
        out.push(CandidateValue {
            value: location.dist(a),
            provenance: Provenance::TwoPoint {
                p: [i, j],
                disc: di,
                location,
            },
        })
    };
    if d.contains(mid, tol) {
        push(mid);
    }
    // Bisector: mid + s * n with n a unit normal of ab.
    let n = Point::new(-along.y, along.x).scale(1.0 / len);
    let off = mid - d.centre;
    let bq = off.dot(n);
    let cq = off.dot(off) - d.radius * d.radius;
    let disc = bq * bq - cq;
    if disc < -tol.eps_predicate {
        return;
    }
    let sq = disc.max(0.0).sqrt();
    push(mid + n.scale(-bq + sq));
    if sq > 0.0 {
        push(mid + n.scale(-bq - sq));
    }
}

fn circumcentre(a: Point, b: Point, c: Point) -> Option<Point> {
    let ab = b - a;
    let ac = c - a;
    let det = 2.0 * ab.cross(ac);
    let scale = ab.dot(ab).max(ac.dot(ac));
    if det.abs() <= 1e-12 * scale {
        return None;
    }
    let ux = (ac.y * ab.dot(ab) - ab.y * ac.dot(ac)) / det;
    let uy = (ab.x * ac.dot(ac) - ac.x * ab.dot(ab)) / det;
    Some(a + Point::new(ux, uy))
}

/// Distances below which the exact algorithm for disjoint discs applies.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SmallThreshold;

impl SmallThreshold {
    /// `r (sqrt(5 - 2 sqrt 3) - 1) / 2`: below it, constraint discs of two
    /// different region pairs cannot be stabbed by one point.
    pub fn value(r: f64) -> f64 {
        r * ((5.0 - 2.0 * 3f64.sqrt()).sqrt() - 1.0) / 2.0
    }

    /// `r (2 / sqrt 3 - 1)`: smallest disc meeting three disjoint discs of radius r.
    pub fn degree3(r: f64) -> f64 {
        r * (2.0 / 3f64.sqrt() - 1.0)
    }
}

/// `p(d)`: the disc of radius `d` around a precise point.
pub type ConstraintDisc = Disc;

#[derive(Clone, Debug, PartialEq)]
pub struct FeasibleRegion {
    pub base: usize,
    pub constraints: Vec<ConstraintDisc>,
    pub children: Vec<usize>,
}

impl FeasibleRegion {
    fn discs(&self, q: &[Disc]) -> Vec<Disc> {
        let mut v = Vec::with_capacity(self.constraints.len() + 1);
        v.push(q[self.base]);
        v.extend_from_slice(&self.constraints);
        v
    }

    /// A point of the region intersected with `extra`, if any.
    pub fn point_with(&self, q: &[Disc], extra: &[Disc], tol: &Tolerance) -> Option<Point> {
        let mut v = self.discs(q);
        v.extend_from_slice(extra);
        discs_common_point(&v, tol)
    }

    pub fn point(&self, q: &[Disc], tol: &Tolerance) -> Option<Point> {
        self.point_with(q, &[], tol)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairBucket {
    pub regions: (usize, usize),
    pub members: Vec<usize>,
}

/// State of the decision procedure for one value of `d`.
#[derive(Clone, Debug)]
pub struct DecisionState {
    pub d: f64,
    pub points: Vec<Point>,
    pub discs: Vec<Disc>,
    pub regions: Vec<FeasibleRegion>,
    /// Points not yet committed to a region.
    pub residual: Vec<usize>,
    /// Buckets left for the matching stage.
    pub buckets: Vec<PairBucket>,
    /// For each bucket, the region it was matched to.
    pub matching: Vec<Option<usize>>,
}

/// Outcome of a reduction step.
#[derive(Clone, Debug)]
pub enum Reduction {
    /// The state is consistent and nothing more can be forced.
    Stable,
    Infeasible,
    /// Several two-point splits remain; each branch is a restricted copy.
    Branch(Vec<DecisionState>),
}

impl DecisionState {
    pub fn new(points: &[Point], discs: &[Disc], d: f64) -> Self {
        DecisionState {
            d,
            points: points.to_vec(),
            discs: discs.to_vec(),
            regions: (0..discs.len())
                .map(|base| FeasibleRegion {
                    base,
                    constraints: Vec::new(),
                    children: Vec::new(),
                })
                .collect(),
            residual: (0..points.len()).collect(),
            buckets: Vec::new(),
            matching: Vec::new(),
        }
    }

    pub fn constraint(&self, p: usize) -> ConstraintDisc {
        Disc::new(self.points[p], self.d)
    }

    /// Regions whose feasible set meets `p(d)`.
    pub fn degree_regions(&self, p: usize, tol: &Tolerance) -> Vec<usize> {
        let c = self.constraint(p);
        self.regions
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                // Cheap reject on the base disc before the exact test.
                let base = &self.discs[r.base];
                base.centre.dist(c.centre) <= base.radius + c.radius + tol.eps_predicate
                    && r.point_with(&self.discs, &[c], tol).is_some()
            })
            .map(|(i, _)| i)
            .collect()
    }

    fn restrict(&mut self, region: usize, members: &[usize]) {
        for &p in members {
            let c = self.constraint(p);
            let r = &mut self.regions[region];
            r.constraints.push(c);
            r.children.push(p);
        }
        self.residual.retain(|p| !members.contains(p));
    }

    /// Commits points that can only reach one region; `false` if some
    /// region empties or some point reaches none.
    pub fn remove_degree_1(&mut self, tol: &Tolerance) -> bool {
        loop {
            let mut forced = None;
            for &p in &self.residual {
                let regs = self.degree_regions(p, tol);
                match regs.len() {
                    0 => return false,
                    1 => {
                        forced = Some((p, regs[0]));
                        break;
                    }
                    _ => {}
                }
            }
            let Some((p, region)) = forced else {
                return true;
            };
            self.restrict(region, &[p]);
            if self.regions[region].point(&self.discs, tol).is_none() {
                return false;
            }
        }
    }

    /// Groups residual points by the pair of regions they reach.
    pub fn pair_buckets(&self, tol: &Tolerance) -> Result<Vec<PairBucket>, usize> {
        let mut map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for &p in &self.residual {
            let regs = self.degree_regions(p, tol);
            if regs.len() != 2 {
                return Err(p);
            }
            map.entry((regs[0], regs[1])).or_default().push(p);
        }
        Ok(map
            .into_iter()
            .map(|(regions, members)| PairBucket { regions, members })
            .collect())
    }

    /// Resolves degree-2 buckets that can be settled locally.
    pub fn remove_degree_2(&mut self, tol: &Tolerance) -> Reduction {
        'restart: loop {
            let buckets = match self.pair_buckets(tol) {
                Ok(b) => b,
                Err(_) => {
                    // Regions shrank: some point lost a partner.
                    if !self.remove_degree_1(tol) {
                        return Reduction::Infeasible;
                    }
                    continue 'restart;
                }
            };
            let mut deferred = Vec::new();
            for bucket in buckets {
                let (i, j) = bucket.regions;
                let members: Vec<Disc> = bucket.members.iter().map(|&p| self.constraint(p)).collect();
                let via_i = self.regions[i].point_with(&self.discs, &members, tol).is_some();
                let via_j = self.regions[j].point_with(&self.discs, &members, tol).is_some();
                match (via_i, via_j) {
                    (true, true) => deferred.push(bucket),
                    (true, false) | (false, true) => {
                        let region = if via_i { i } else { j };
                        self.restrict(region, &bucket.members);
                        if !self.remove_degree_1(tol) {
                            return Reduction::Infeasible;
                        }
                        continue 'restart;
                    }
                    (false, false) => {
                        let splits = self.two_point_splits(&bucket, tol);
                        match splits.len() {
                            0 => return Reduction::Infeasible,
                            1 => {
                                let (left, right) = &splits[0];
                                self.restrict(i, left);
                                self.restrict(j, right);
                                if !self.remove_degree_1(tol) {
                                    return Reduction::Infeasible;
                                }
                                continue 'restart;
                            }
                            _ => {
                                let branches = splits
                                    .iter()
                                    .map(|(left, right)| {
                                        let mut s = self.clone();
                                        s.restrict(i, left);
                                        s.restrict(j, right);
                                        s
                                    })
                                    .collect();
                                return Reduction::Branch(branches);
                            }
                        }
                    }
                }
            }
            self.buckets = deferred;
            return Reduction::Stable;
        }
    }

    /// Bipartitions `(to_i, to_j)` of a bucket, both sides non-empty, where
    /// each side can be stabbed by one point of its region.
    fn two_point_splits(&self, bucket: &PairBucket, tol: &Tolerance) -> Vec<(Vec<usize>, Vec<usize>)> {
        let (i, j) = bucket.regions;
        let n = bucket.members.len();
        assert!(n < 24, "bucket of {n} points is too large for split enumeration");
        let mut out = Vec::new();
        for mask in 1..(1u32 << n) - 1 {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (k, &p) in bucket.members.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    left.push(p);
                } else {
                    right.push(p);
                }
            }
            let cl: Vec<Disc> = left.iter().map(|&p| self.constraint(p)).collect();
            let cr: Vec<Disc> = right.iter().map(|&p| self.constraint(p)).collect();
            if self.regions[i].point_with(&self.discs, &cl, tol).is_some()
                && self.regions[j].point_with(&self.discs, &cr, tol).is_some()
            {
                out.push((left, right));
            }
        }
        out
    }

    /// Matches every remaining bucket to one of its two regions.
    pub fn build_graph_and_match(&mut self, tol: &Tolerance) -> bool {
        let adjacency: Vec<Vec<usize>> = self
            .buckets
            .iter()
            .map(|b| {
                let members: Vec<Disc> = b.members.iter().map(|&p| self.constraint(p)).collect();
                [b.regions.0, b.regions.1]
                    .into_iter()
                    .filter(|&r| self.regions[r].point_with(&self.discs, &members, tol).is_some())
                    .collect()
            })
            .collect();
        self.matching = maximum_matching(&adjacency, self.regions.len());
        if self.matching.iter().any(Option::is_none) {
            return false;
        }
        let assignments: Vec<(usize, Vec<usize>)> = self
            .buckets
            .iter()
            .zip(&self.matching)
            .map(|(b, m)| (m.expect("checked above"), b.members.clone()))
            .collect();
        for (region, members) in assignments {
            self.restrict(region, &members);
        }
        true
    }

    /// One realisation point per region.
    pub fn witness(&self, tol: &Tolerance) -> Option<Vec<Point>> {
        self.regions.iter().map(|r| r.point(&self.discs, tol)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub feasible: bool,
    /// Final state; for a feasible decision every region is non-empty and
    /// every point is committed.
    pub state: DecisionState,
}

/// Decides whether `h_min(P, Q~) <= d` for pairwise disjoint discs and `d`
/// below the small-distance threshold.
pub fn independent_sets_decide(p: &[Point], q: &[Disc], d: f64, tol: &Tolerance) -> Result<Decision> {
    validate_points(p)?;
    validate_discs(q)?;
    if let Some((i, j)) = first_overlapping_pair(q, tol) {
        return Err(Error::invalid(format!("discs {i} and {j} are not disjoint")));
    }
    let state = DecisionState::new(p, q, d);
    for pi in 0..p.len() {
        let deg = state.degree_regions(pi, tol).len();
        if deg > 2 {
            return Err(Error::invalid(format!(
                "p({pi}) meets {deg} discs; d = {d} is above the small-distance threshold"
            )));
        }
    }
    Ok(decide_from(state, tol))
}

fn decide_from(mut state: DecisionState, tol: &Tolerance) -> Decision {
    let fail = |state| Decision { feasible: false, state };
    if !state.remove_degree_1(tol) {
        return fail(state);
    }
    match state.remove_degree_2(tol) {
        Reduction::Infeasible => fail(state),
        Reduction::Branch(branches) => {
            let mut last = None;
            for b in branches {
                let dec = decide_from(b, tol);
                if dec.feasible {
                    return dec;
                }
                last = Some(dec);
            }
            last.unwrap_or_else(|| fail(state))
        }
        Reduction::Stable => {
            let feasible = state.build_graph_and_match(tol);
            Decision { feasible, state }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum IndependentSetsOutcome {
    Exact {
        value: f64,
        witness: Vec<Point>,
    },
    /// `h_min` is at least the small-distance threshold of the smallest disc.
    ThresholdExceeded {
        threshold: f64,
    },
}

/// Exact `h_min(P, Q~)` for pairwise disjoint discs when it is below the
/// small-distance threshold.
pub fn independent_sets(p: &[Point], q: &[Disc], tol: &Tolerance) -> Result<IndependentSetsOutcome> {
    validate_points(p)?;
    validate_discs(q)?;
    if let Some((i, j)) = first_overlapping_pair(q, tol) {
        return Err(Error::invalid(format!("discs {i} and {j} are not disjoint")));
    }
    let threshold = SmallThreshold::value(min_radius(q));
    let values: Vec<f64> = candidate_values(p, q, tol)
        .into_iter()
        .map(|c| c.value)
        .filter(|&v| v < threshold)
        .collect();
    let decide = |d: f64| independent_sets_decide(p, q, d, tol);
    let Some(&last) = values.last() else {
        return Ok(IndependentSetsOutcome::ThresholdExceeded { threshold });
    };
    let top = decide(last)?;
    if !top.feasible {
        return Ok(IndependentSetsOutcome::ThresholdExceeded { threshold });
    }
    let (mut lo, mut hi) = (0usize, values.len() - 1);
    let mut best = top;
    // Invariant: values[hi] is feasible; everything below lo is not.
    while lo < hi {
        let mid = (lo + hi) / 2;
        let dec = decide(values[mid])?;
        if dec.feasible {
            hi = mid;
            best = dec;
        } else {
            lo = mid + 1;
        }
    }
    if best.state.d != values[hi] {
        best = decide(values[hi])?;
    }
    let witness = best
        .state
        .witness(tol)
        .ok_or_else(|| Error::Invariant("feasible decision left an empty region".into()))?;
    let achieved = directed_hausdorff(p, &witness)?;
    if achieved > values[hi] + 10.0 * tol.eps_predicate {
        return Err(Error::Invariant(format!(
            "witness reaches {achieved}, decision accepted {}",
            values[hi]
        )));
    }
    Ok(IndependentSetsOutcome::Exact {
        value: values[hi],
        witness,
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

    fn has_value(c: &[CandidateValue], v: f64) -> bool {
        c.iter().any(|c| (c.value - v).abs() < 1e-9)
    }

    #[test]
    fn place_together_examples() {
        let (v, w) = place_together(&[disc(0., 0., 1.)], &[pt(3., 0.)]).unwrap();
        assert_eq!((v, w), (2.0, vec![pt(1., 0.)]));
        let (v, w) = place_together(&[disc(0., 0., 2.)], &[pt(1., 0.)]).unwrap();
        assert_eq!((v, w), (0.0, vec![pt(1., 0.)]));
        let (v, _) = place_together(&[disc(0., 0., 1.), disc(10., 0., 1.)], &[pt(3., 0.), pt(9., 0.)]).unwrap();
        assert_eq!(v, 2.0);
        assert!(place_together(&[], &[pt(0., 0.)]).is_err());
    }

    #[test]
    fn candidate_examples() {
        let tol = Tolerance::default();
        assert!(has_value(
            &candidate_values(&[pt(0., 0.)], &[disc(3., 0., 1.)], &tol),
            2.0
        ));
        let c = candidate_values(&[pt(0., 0.), pt(2., 0.)], &[disc(1., 5., 1.)], &tol);
        for v in [26f64.sqrt() - 1.0, 17f64.sqrt(), 37f64.sqrt()] {
            assert!(has_value(&c, v), "missing {v}");
        }
        assert!(c.windows(2).all(|w| w[0].value < w[1].value));
        let c = candidate_values(&[pt(0., 0.), pt(2., 0.)], &[disc(1., 0., 5.)], &tol);
        assert!(has_value(&c, 0.0) && has_value(&c, 1.0));
    }

    #[test]
    fn threshold_constants() {
        assert!((SmallThreshold::value(1.0) - 0.119_656_7).abs() < 1e-6);
        assert!((SmallThreshold::degree3(1.0) - 0.154_700_5).abs() < 1e-6);
    }

    #[test]
    fn decide_examples() {
        let tol = Tolerance::default();
        let q = [disc(0., 0., 1.), disc(3., 0., 1.)];
        let dec = independent_sets_decide(&[pt(1.05, 0.), pt(1.95, 0.)], &q, 0.05, &tol).unwrap();
        assert!(dec.feasible);
        let dec = independent_sets_decide(&[pt(1.05, 0.), pt(-1.05, 0.)], &q, 0.05, &tol).unwrap();
        assert!(!dec.feasible);
        let q2 = [disc(0., 0., 1.), disc(2.1, 0., 1.)];
        let dec = independent_sets_decide(&[pt(1.05, 0.)], &q2, 0.05, &tol).unwrap();
        assert!(dec.feasible);
        let overlapping = [disc(0., 0., 1.), disc(1.5, 0., 1.)];
        assert!(independent_sets_decide(&[pt(0., 0.)], &overlapping, 0.05, &tol).is_err());
    }

    #[test]
    fn degree_one_pass() {
        let tol = Tolerance::default();
        let q = [disc(0., 0., 1.), disc(3., 0., 1.)];
        let mut s = DecisionState::new(&[], &q, 0.05);
        assert!(s.remove_degree_1(&tol));
        assert!(s.regions.iter().all(|r| r.children.is_empty()));

        let mut s = DecisionState::new(&[pt(1.05, 0.), pt(1.95, 0.)], &q, 0.05);
        assert!(s.remove_degree_1(&tol));
        assert_eq!(s.regions[0].children, vec![0]);
        assert_eq!(s.regions[0].constraints, vec![disc(1.05, 0., 0.05)]);
        assert!(s.regions[0].point_with(&q, &[disc(1., 0., 1e-12)], &tol).is_some());

        let mut s = DecisionState::new(&[pt(1.05, 0.), pt(-1.05, 0.)], &q, 0.05);
        assert!(!s.remove_degree_1(&tol));
    }

    #[test]
    fn degree_two_pass() {
        let tol = Tolerance::default();
        let q = [disc(0., 0., 1.), disc(2.1, 0., 1.)];
        let mut s = DecisionState::new(&[pt(1.05, 0.)], &q, 0.05);
        assert!(s.remove_degree_1(&tol));
        assert!(matches!(s.remove_degree_2(&tol), Reduction::Stable));
        assert_eq!(
            s.buckets,
            vec![PairBucket {
                regions: (0, 1),
                members: vec![0]
            }]
        );
        assert!(s.build_graph_and_match(&tol));

        // Region 1 is pinned to the far side by a degree-1 child, so the
        // shared point can only be served from region 0.
        let mut s = DecisionState::new(&[pt(1.05, 0.), pt(3.15, 0.)], &q, 0.05);
        assert!(s.remove_degree_1(&tol));
        assert_eq!(s.regions[1].children, vec![1]);
        assert!(matches!(s.remove_degree_2(&tol), Reduction::Stable));
        assert_eq!(s.regions[0].children, vec![0]);
        assert!(s.residual.is_empty() && s.buckets.is_empty());
    }

    #[test]
    fn bucket_with_no_reachable_region() {
        let tol = Tolerance::default();
        // Both regions are pinned away from the gap between them.
        let q = [disc(0., 0., 1.), disc(2.1, 0., 1.)];
        let p = [pt(1.05, 0.), pt(-1.05, 0.), pt(3.15, 0.)];
        let dec = independent_sets_decide(&p, &q, 0.05, &tol).unwrap();
        assert!(!dec.feasible);
    }

    #[test]
    fn independent_sets_examples() {
        let tol = Tolerance::default();
        let q = [disc(0., 0., 1.), disc(3., 0., 1.)];
        match independent_sets(&[pt(1.05, 0.), pt(1.95, 0.)], &q, &tol).unwrap() {
            IndependentSetsOutcome::Exact { value, witness } => {
                assert!((value - 0.05).abs() < 1e-12);
                assert!(witness[0].dist(pt(1., 0.)) < 1e-9 && witness[1].dist(pt(2., 0.)) < 1e-9);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            independent_sets(&[pt(0., 2.)], &[disc(0., 0., 1.)], &tol).unwrap(),
            IndependentSetsOutcome::ThresholdExceeded { .. }
        ));
        match independent_sets(&[pt(1.05, 0.)], &[disc(0., 0., 1.), disc(2.1, 0., 1.)], &tol).unwrap() {
            IndependentSetsOutcome::Exact { value, .. } => assert!((value - 0.05).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
    }
}
