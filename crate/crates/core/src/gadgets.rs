//! Planar 3-SAT reduction geometry: variable cycles, literal chains and
//! clause triangles built from points and discs of radius `2.5 eps`.
//!
//! Every point sits at boundary gap `eps` from its neighbouring discs, so a
//! realisation serving all points at distance `eps` exists exactly when the
//! chains can propagate a satisfying assignment to every clause point.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{closest_point_in_disc, Disc, Point};

const GEOM_TOL: f64 = 1e-9;
/// Disc radius in units of `eps`.
pub const RADIUS_FACTOR: f64 = 2.5;
/// Minimum distance between points that share no neighbouring disc.
pub const SEPARATION_FACTOR: f64 = 6.0;

fn pitch(eps: f64) -> f64 {
    eps * (1.0 + RADIUS_FACTOR)
}

fn unit(v: Point) -> Point {
    v.scale(1.0 / v.norm())
}

fn construction(msg: impl Into<String>) -> Error {
    Error::Construction(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub variable: usize,
    pub negated: bool,
}

impl Literal {
    pub const fn pos(variable: usize) -> Self {
        Literal {
            variable,
            negated: false,
        }
    }

    pub const fn neg(variable: usize) -> Self {
        Literal {
            variable,
            negated: true,
        }
    }

    pub fn value(&self, assignment: &[bool]) -> bool {
        assignment[self.variable] != self.negated
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Formula {
    pub variables: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl Formula {
    pub fn new(variables: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (ci, clause) in clauses.iter().enumerate() {
            if let Some(l) = clause.iter().find(|l| l.variable >= variables) {
                return Err(Error::invalid(format!(
                    "clause {ci} uses variable {} of {variables}",
                    l.variable
                )));
            }
        }
        Ok(Formula { variables, clauses })
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.value(assignment)))
    }

    /// All assignments in binary counting order. Intended for small formulas.
    pub fn assignments(&self) -> impl Iterator<Item = Vec<bool>> + '_ {
        assert!(self.variables < 24, "too many variables to enumerate");
        (0u32..1 << self.variables).map(|m| (0..self.variables).map(|v| m >> v & 1 == 1).collect())
    }

    pub fn satisfying_assignments(&self) -> Vec<Vec<bool>> {
        self.assignments().filter(|a| self.satisfied_by(a)).collect()
    }
}

/// Closed polyline for one variable cycle. The first vertex carries a point.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleLayout {
    pub variable: usize,
    pub vertices: Vec<Point>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClausePlacement {
    pub anchor: Point,
    /// Direction of slot 0 in radians; slots 1 and 2 follow at 120 degree steps.
    pub orientation: f64,
    pub above: bool,
}

/// Open polyline from a tap point to the centre of a clause slot. Literal
/// `slot` of clause `clause` is carried by this chain.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainRoute {
    pub clause: usize,
    pub slot: usize,
    /// Element index of the tapped disc in its cycle (odd).
    pub host: usize,
    pub vertices: Vec<Point>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    /// Cycles in left-to-right order along the variable line.
    pub cycles: Vec<CycleLayout>,
    pub clauses: Vec<ClausePlacement>,
    pub routes: Vec<ChainRoute>,
}

impl Embedding {
    /// Rigid motion: rotation by `angle` about the origin, then translation.
    pub fn transformed(&self, angle: f64, offset: Point) -> Embedding {
        let f = |p: Point| p.rotate(angle) + offset;
        Embedding {
            cycles: self
                .cycles
                .iter()
                .map(|c| CycleLayout {
                    variable: c.variable,
                    vertices: c.vertices.iter().map(|&p| f(p)).collect(),
                })
                .collect(),
            clauses: self
                .clauses
                .iter()
                .map(|c| ClausePlacement {
                    anchor: f(c.anchor),
                    orientation: c.orientation + angle,
                    above: c.above,
                })
                .collect(),
            routes: self
                .routes
                .iter()
                .map(|r| ChainRoute {
                    vertices: r.vertices.iter().map(|&p| f(p)).collect(),
                    ..r.clone()
                })
                .collect(),
        }
    }
}

/// Places elements every `step` along a polyline. Each segment must be a
/// whole number of steps long.
fn subdivide(vertices: &[Point], closed: bool, step: f64) -> Result<Vec<Point>> {
    if vertices.len() < 2 {
        return Err(construction("layout needs at least two vertices"));
    }
    let segs = if closed { vertices.len() } else { vertices.len() - 1 };
    let mut out = Vec::new();
    for i in 0..segs {
        let a = vertices[i];
        let b = vertices[(i + 1) % vertices.len()];
        let k = a.dist(b) / step;
        let n = k.round();
        if n < 1.0 || (k - n).abs() > GEOM_TOL * k.max(1.0) {
            return Err(construction(format!(
                "segment {i} has length {:.6} steps, not a positive whole number",
                k
            )));
        }
        let n = n as usize;
        out.extend((0..n).map(|j| a + (b - a).scale(j as f64 / n as f64)));
    }
    if !closed {
        out.push(*vertices.last().unwrap());
    }
    Ok(out)
}

/// Alternating points and discs of one variable cycle with its two
/// canonical realisations.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleElements {
    /// Element positions; even indices are points, odd indices disc centres.
    pub elements: Vec<Point>,
    pub points: Vec<Point>,
    pub discs: Vec<Disc>,
    /// Each disc at its boundary point nearest the preceding point.
    pub q0: Vec<Point>,
    /// Each disc at its boundary point nearest the following point.
    pub q1: Vec<Point>,
    clockwise: bool,
}

impl CycleElements {
    fn neighbours(&self, host: usize) -> (Point, Point) {
        let n = self.elements.len();
        (self.elements[(host + n - 1) % n], self.elements[(host + 1) % n])
    }

    fn outward(&self, dir: Point) -> Point {
        if self.clockwise {
            dir.rotate(FRAC_PI_2)
        } else {
            dir.rotate(-FRAC_PI_2)
        }
    }

    /// Where a chain tapping disc element `host` must start. A non-negated
    /// tap sits at distance `eps` from the disc's `q1` position.
    pub fn tap_point(&self, host: usize, negated: bool, eps: f64) -> Result<Point> {
        if host.is_multiple_of(2) || host >= self.elements.len() {
            return Err(construction(format!("element {host} is not a cycle disc")));
        }
        let (before, after) = self.neighbours(host);
        let target = if negated { self.q0[host / 2] } else { self.q1[host / 2] };
        Ok(target + self.outward(unit(after - before)).scale(eps))
    }
}

pub fn build_cycle(layout: &[Point], eps: f64) -> Result<CycleElements> {
    check_eps(eps)?;
    let elements = subdivide(layout, true, pitch(eps))?;
    if elements.len() < 4 || elements.len() % 2 != 0 {
        return Err(construction(format!(
            "cycle perimeter holds {} elements, need an even number of at least 4",
            elements.len()
        )));
    }
    let r = RADIUS_FACTOR * eps;
    let n = elements.len();
    let points: Vec<Point> = elements.iter().step_by(2).copied().collect();
    let mut discs = Vec::new();
    let mut q0 = Vec::new();
    let mut q1 = Vec::new();
    for i in (1..n).step_by(2) {
        let c = elements[i];
        discs.push(Disc::new(c, r));
        q0.push(c + unit(elements[i - 1] - c).scale(r));
        q1.push(c + unit(elements[(i + 1) % n] - c).scale(r));
    }
    let area: f64 = (0..layout.len())
        .map(|i| layout[i].cross(layout[(i + 1) % layout.len()]))
        .sum();
    let cycle = CycleElements {
        elements,
        points,
        discs,
        q0,
        q1,
        clockwise: area < 0.0,
    };
    for (i, a) in cycle.discs.iter().enumerate() {
        for (j, b) in cycle.discs.iter().enumerate().skip(i + 1) {
            if a.centre.dist(b.centre) <= 2.0 * r + GEOM_TOL {
                return Err(construction(format!("cycle too curved: discs {i} and {j} overlap")));
            }
        }
    }
    Ok(cycle)
}

/// Alternating points and discs of one literal chain. Element 0 is the tap
/// point and the last element is the clause slot disc.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainElements {
    pub elements: Vec<Point>,
    pub points: Vec<Point>,
    pub discs: Vec<Disc>,
}

pub fn build_chain(
    cycle: &CycleElements,
    host: usize,
    negated: bool,
    route: &[Point],
    eps: f64,
) -> Result<ChainElements> {
    check_eps(eps)?;
    let tap = cycle.tap_point(host, negated, eps)?;
    if route.first().is_none_or(|s| s.dist(tap) > GEOM_TOL * eps.max(1.0)) {
        return Err(construction(format!("route does not start at the tap point {tap}")));
    }
    let elements = subdivide(route, false, pitch(eps))?;
    if elements.len() % 2 != 0 {
        return Err(construction("chain route must end on a disc (odd number of steps)"));
    }
    let r = RADIUS_FACTOR * eps;
    Ok(ChainElements {
        points: elements.iter().step_by(2).copied().collect(),
        discs: elements.iter().skip(1).step_by(2).map(|&c| Disc::new(c, r)).collect(),
        elements,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClauseElements {
    pub point: Point,
    pub slots: [Disc; 3],
}

pub fn build_clause(anchor: Point, orientation: f64, eps: f64) -> ClauseElements {
    let r = RADIUS_FACTOR * eps;
    let slot = |k: usize| {
        let a = orientation + k as f64 * std::f64::consts::TAU / 3.0;
        Disc::new(anchor + Point::polar(a).scale(pitch(eps)), r)
    };
    ClauseElements {
        point: anchor,
        slots: [slot(0), slot(1), slot(2)],
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(Error::invalid("epsilon must be positive and finite"));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    Cycle(usize),
    Chain(usize),
    Clause(usize),
}

/// Where an element came from. `position` is the index along its cycle or
/// chain; for clauses 0 is the clause point and 1..=3 the slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementTag {
    pub structure: Structure,
    pub position: usize,
    /// `Some(negated)` on chain tap points.
    pub tap_parity: Option<bool>,
}

impl fmt::Display for ElementTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.position.is_multiple_of(2) {
            "point"
        } else {
            "disc"
        };
        match self.structure {
            Structure::Cycle(i) => write!(f, "cycle {i} {kind} {}", self.position),
            Structure::Chain(i) if self.tap_parity.is_some() => write!(f, "chain {i} tap point"),
            Structure::Chain(i) => write!(f, "chain {i} {kind} {}", self.position),
            Structure::Clause(i) if self.position == 0 => write!(f, "clause {i} point"),
            Structure::Clause(i) => write!(f, "clause {i} slot {}", self.position - 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CycleRecord {
    pub variable: usize,
    /// Indices into `GadgetInstance::p`, in cycle order.
    pub points: Vec<usize>,
    /// Indices into `GadgetInstance::q`, in cycle order.
    pub discs: Vec<usize>,
    pub q0: Vec<Point>,
    pub q1: Vec<Point>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainRecord {
    pub clause: usize,
    pub slot: usize,
    pub literal: Literal,
    /// Index into `GadgetInstance::q` of the tapped cycle disc.
    pub host: usize,
    /// Chain points starting with the tap point.
    pub points: Vec<usize>,
    /// Chain discs ending with the clause slot disc.
    pub discs: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClauseRecord {
    pub point: usize,
    pub slots: [usize; 3],
}

/// A point and a disc that are neighbours in some structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Link {
    pub point: usize,
    pub disc: usize,
    /// Tap links join a chain's first point to its host; their gap is free.
    pub tap: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GadgetInstance {
    pub p: Vec<Point>,
    pub q: Vec<Disc>,
    pub epsilon: f64,
    pub r: f64,
    pub p_tags: Vec<ElementTag>,
    pub q_tags: Vec<ElementTag>,
    pub links: Vec<Link>,
    pub cycles: Vec<CycleRecord>,
    pub chains: Vec<ChainRecord>,
    pub clauses: Vec<ClauseRecord>,
}

impl GadgetInstance {
    /// Rigid motion: rotation by `angle` about the origin, then translation.
    pub fn transformed(&self, angle: f64, offset: Point) -> GadgetInstance {
        let f = |p: Point| p.rotate(angle) + offset;
        let mut out = self.clone();
        out.p.iter_mut().for_each(|p| *p = f(*p));
        out.q.iter_mut().for_each(|d| d.centre = f(d.centre));
        for c in &mut out.cycles {
            c.q0.iter_mut().for_each(|p| *p = f(*p));
            c.q1.iter_mut().for_each(|p| *p = f(*p));
        }
        out
    }

    fn add_point(&mut self, p: Point, tag: ElementTag) -> usize {
        self.p.push(p);
        self.p_tags.push(tag);
        self.p.len() - 1
    }

    fn add_disc(&mut self, d: Disc, tag: ElementTag) -> usize {
        self.q.push(d);
        self.q_tags.push(tag);
        self.q.len() - 1
    }

    fn link(&mut self, point: usize, disc: usize, tap: bool) {
        self.links.push(Link { point, disc, tap });
    }

    /// Checks disjointness, `eps` gaps on links, `eps` clearance elsewhere
    /// and the `6 eps` separation of points sharing no disc.
    pub fn check_invariants(&self) -> Result<()> {
        let eps = self.epsilon;
        let tol = GEOM_TOL * eps.max(1.0);
        if (self.r - RADIUS_FACTOR * eps).abs() > tol {
            return Err(construction(format!(
                "disc radius {} is not {RADIUS_FACTOR} eps",
                self.r
            )));
        }
        for (i, d) in self.q.iter().enumerate() {
            if (d.radius - self.r).abs() > tol {
                return Err(construction(format!("{} has radius {}", self.q_tags[i], d.radius)));
            }
        }
        for i in 0..self.q.len() {
            for j in i + 1..self.q.len() {
                let gap = self.q[i].centre.dist(self.q[j].centre) - 2.0 * self.r;
                if gap <= tol {
                    return Err(construction(format!(
                        "{} and {} are not disjoint (gap {gap:.3e})",
                        self.q_tags[i], self.q_tags[j]
                    )));
                }
            }
        }
        let mut adjacent = vec![Vec::new(); self.p.len()];
        for l in &self.links {
            adjacent[l.point].push(l.disc);
            let gap = self.p[l.point].dist(self.q[l.disc].centre) - self.r;
            if !l.tap && (gap - eps).abs() > tol {
                return Err(construction(format!(
                    "{} and {} have gap {gap} instead of {eps}",
                    self.p_tags[l.point], self.q_tags[l.disc]
                )));
            }
        }
        for (i, p) in self.p.iter().enumerate() {
            for (j, d) in self.q.iter().enumerate() {
                if adjacent[i].contains(&j) {
                    continue;
                }
                let gap = p.dist(d.centre) - self.r;
                if gap < eps - tol {
                    return Err(construction(format!(
                        "{} and {} are only {gap:.6} apart",
                        self.p_tags[i], self.q_tags[j]
                    )));
                }
            }
        }
        for i in 0..self.p.len() {
            for j in i + 1..self.p.len() {
                if adjacent[i].iter().any(|d| adjacent[j].contains(d)) {
                    continue;
                }
                let dist = self.p[i].dist(self.p[j]);
                if dist < SEPARATION_FACTOR * eps - tol {
                    return Err(construction(format!(
                        "{} and {} are {dist:.6} apart, below {SEPARATION_FACTOR} eps",
                        self.p_tags[i], self.p_tags[j]
                    )));
                }
            }
        }
        Ok(())
    }
}

pub fn assemble(f: &Formula, e: &Embedding, eps: f64) -> Result<GadgetInstance> {
    check_eps(eps)?;
    if e.clauses.len() != f.clauses.len() {
        return Err(construction(format!(
            "embedding places {} clauses, formula has {}",
            e.clauses.len(),
            f.clauses.len()
        )));
    }
    let mut cycle_of = vec![None; f.variables];
    for (ci, c) in e.cycles.iter().enumerate() {
        match cycle_of.get_mut(c.variable) {
            Some(slot @ None) => *slot = Some(ci),
            Some(Some(_)) => return Err(construction(format!("variable {} has two cycles", c.variable))),
            None => return Err(construction(format!("cycle for unknown variable {}", c.variable))),
        }
    }
    if let Some(v) = cycle_of.iter().position(Option::is_none) {
        return Err(construction(format!("variable {v} has no cycle")));
    }
    let mut routed = vec![[false; 3]; f.clauses.len()];
    for r in &e.routes {
        if r.clause >= f.clauses.len() || r.slot >= 3 {
            return Err(construction(format!(
                "route targets clause {} slot {}",
                r.clause, r.slot
            )));
        }
        if std::mem::replace(&mut routed[r.clause][r.slot], true) {
            return Err(construction(format!(
                "clause {} slot {} routed twice",
                r.clause, r.slot
            )));
        }
    }
    if let Some(c) = routed.iter().position(|s| s.contains(&false)) {
        return Err(construction(format!("clause {c} has an unrouted literal")));
    }

    let mut inst = GadgetInstance {
        p: Vec::new(),
        q: Vec::new(),
        epsilon: eps,
        r: RADIUS_FACTOR * eps,
        p_tags: Vec::new(),
        q_tags: Vec::new(),
        links: Vec::new(),
        cycles: Vec::new(),
        chains: Vec::new(),
        clauses: Vec::new(),
    };

    let mut built = Vec::new();
    for (ci, layout) in e.cycles.iter().enumerate() {
        let cyc = build_cycle(&layout.vertices, eps)?;
        let tag = |position| ElementTag {
            structure: Structure::Cycle(ci),
            position,
            tap_parity: None,
        };
        let mut rec = CycleRecord {
            variable: layout.variable,
            points: Vec::new(),
            discs: Vec::new(),
            q0: cyc.q0.clone(),
            q1: cyc.q1.clone(),
        };
        for (k, &x) in cyc.elements.iter().enumerate() {
            if k % 2 == 0 {
                rec.points.push(inst.add_point(x, tag(k)));
            } else {
                rec.discs.push(inst.add_disc(cyc.discs[k / 2], tag(k)));
            }
        }
        let n = rec.points.len();
        for k in 0..n {
            inst.link(rec.points[k], rec.discs[k], false);
            inst.link(rec.points[(k + 1) % n], rec.discs[k], false);
        }
        inst.cycles.push(rec);
        built.push(cyc);
    }

    for (ci, place) in e.clauses.iter().enumerate() {
        let cl = build_clause(place.anchor, place.orientation, eps);
        let tag = |position| ElementTag {
            structure: Structure::Clause(ci),
            position,
            tap_parity: None,
        };
        let point = inst.add_point(cl.point, tag(0));
        let slots = [0, 1, 2].map(|k| inst.add_disc(cl.slots[k], tag(k + 1)));
        for s in slots {
            inst.link(point, s, false);
        }
        inst.clauses.push(ClauseRecord { point, slots });
    }

    for (hi, route) in e.routes.iter().enumerate() {
        let literal = f.clauses[route.clause][route.slot];
        let cyc_idx = cycle_of[literal.variable].unwrap();
        let chain = build_chain(&built[cyc_idx], route.host, literal.negated, &route.vertices, eps)
            .map_err(|err| construction(format!("chain {hi}: {err}")))?;
        let slot_disc = inst.clauses[route.clause].slots[route.slot];
        let end = *chain.elements.last().unwrap();
        if end.dist(inst.q[slot_disc].centre) > GEOM_TOL * eps.max(1.0) {
            return Err(construction(format!(
                "chain {hi} does not end at {}",
                inst.q_tags[slot_disc]
            )));
        }
        let mut rec = ChainRecord {
            clause: route.clause,
            slot: route.slot,
            literal,
            host: inst.cycles[cyc_idx].discs[route.host / 2],
            points: Vec::new(),
            discs: Vec::new(),
        };
        let last = chain.elements.len() - 1;
        for (k, &x) in chain.elements.iter().enumerate() {
            let tag = ElementTag {
                structure: Structure::Chain(hi),
                position: k,
                tap_parity: (k == 0).then_some(literal.negated),
            };
            if k == last {
                rec.discs.push(slot_disc);
            } else if k % 2 == 0 {
                rec.points.push(inst.add_point(x, tag));
            } else {
                rec.discs.push(inst.add_disc(chain.discs[k / 2], tag));
            }
        }
        inst.link(rec.points[0], rec.host, true);
        for k in 0..rec.points.len() {
            inst.link(rec.points[k], rec.discs[k], false);
            if k > 0 {
                inst.link(rec.points[k], rec.discs[k - 1], false);
            }
        }
        inst.chains.push(rec);
    }

    inst.check_invariants()?;
    Ok(inst)
}

fn toward(d: &Disc, target: Point) -> Point {
    d.centre + unit(target - d.centre).scale(d.radius)
}

/// Realisation encoding an assignment: each cycle in `q1` when its variable
/// is true, each chain pulled towards its clause when its literal is true
/// and towards its tap otherwise.
pub fn witness_from_assignment(inst: &GadgetInstance, assignment: &[bool]) -> Result<Vec<Point>> {
    let vars = inst.cycles.iter().map(|c| c.variable + 1).max().unwrap_or(0);
    if assignment.len() < vars {
        return Err(Error::invalid(format!(
            "assignment covers {} of {vars} variables",
            assignment.len()
        )));
    }
    let mut out: Vec<Point> = inst.q.iter().map(|d| d.centre).collect();
    for c in &inst.cycles {
        let pos = if assignment[c.variable] { &c.q1 } else { &c.q0 };
        for (&d, &x) in c.discs.iter().zip(pos) {
            out[d] = x;
        }
    }
    for ch in &inst.chains {
        let taut = ch.literal.value(assignment);
        let clause_point = inst.p[inst.clauses[ch.clause].point];
        for (k, &d) in ch.discs.iter().enumerate() {
            let target = match (taut, ch.points.get(k + 1)) {
                (true, Some(&next)) => inst.p[next],
                (true, None) => clause_point,
                (false, _) => inst.p[ch.points[k]],
            };
            out[d] = toward(&inst.q[d], target);
        }
    }
    Ok(out)
}

/// For every slot of a clause, the smallest distance from the clause point
/// to the half of the slot disc facing away from it.
pub fn clause_far_half_distances(inst: &GadgetInstance, clause: usize) -> [f64; 3] {
    let rec = &inst.clauses[clause];
    let p = inst.p[rec.point];
    rec.slots.map(|s| {
        let d = inst.q[s];
        let w = unit(d.centre - p);
        if (p - d.centre).dot(w) > 0.0 {
            return p.dist(closest_point_in_disc(p, &d));
        }
        // From the near side the closest point lies on the dividing diameter.
        let t = w.rotate(FRAC_PI_2);
        let along = (p - d.centre).dot(t).clamp(-d.radius, d.radius);
        p.dist(d.centre + t.scale(along))
    })
}

pub fn clause_gap_check(inst: &GadgetInstance, clause: usize) -> bool {
    let floor = 3.0 * inst.epsilon - GEOM_TOL;
    clause_far_half_distances(inst, clause).iter().all(|&m| m >= floor)
}

/// Third vertex of a path `a -> elbow -> b` with legs of `na` and `nb`
/// steps. `side` picks one of the two solutions.
pub fn elbow(a: Point, b: Point, na: usize, nb: usize, step: f64, side: f64) -> Option<Point> {
    let d = a.dist(b);
    let (ra, rb) = (na as f64 * step, nb as f64 * step);
    if d == 0.0 || d > ra + rb + 1e-12 || d < (ra - rb).abs() - 1e-12 {
        return None;
    }
    let x = (d * d + ra * ra - rb * rb) / (2.0 * d);
    let h = (ra * ra - x * x).max(0.0).sqrt();
    let u = unit(b - a);
    Some(a + u.scale(x) + u.rotate(FRAC_PI_2).scale(side * h))
}

/// Shape of a side chain in the template frame, where the middle tap is at
/// the origin and the clause point straight above it. The chain rises
/// `rise` steps, runs `run` steps at `heading` degrees, then reaches the
/// left slot through an elbow with legs `leg_a` and `leg_b`.
#[derive(Clone, Copy, Debug)]
struct Approach {
    tap_x: f64,
    rise: usize,
    run: usize,
    heading: f64,
    leg_a: usize,
    leg_b: usize,
}

const CLAUSE_HEIGHT: f64 = 14.0;

impl Approach {
    fn vertices(&self) -> Result<Vec<Point>> {
        let step = pitch(1.0);
        let pstar = Point::new(0.0, CLAUSE_HEIGHT);
        let slot = pstar + Point::polar(150f64.to_radians()).scale(step);
        let s = Point::new(self.tap_x, 0.0);
        let v1 = s + Point::new(0.0, self.rise as f64 * step);
        let v2 = v1 + Point::polar(self.heading.to_radians()).scale(self.run as f64 * step);
        let e = elbow(v2, slot, self.leg_a, self.leg_b, step, 1.0)
            .ok_or_else(|| construction("template elbow has no solution"))?;
        let mut out = vec![s];
        for v in [v1, v2, e, slot] {
            if v.dist(*out.last().unwrap()) > GEOM_TOL {
                out.push(v);
            }
        }
        Ok(out)
    }
}

const NEAR: Approach = Approach {
    tap_x: -14.0,
    rise: 3,
    run: 1,
    heading: 60.0,
    leg_a: 2,
    leg_b: 1,
};
const FAR: Approach = Approach {
    tap_x: -21.0,
    rise: 1,
    run: 5,
    heading: 60.0,
    leg_a: 1,
    leg_b: 2,
};

fn middle_route() -> Vec<Point> {
    vec![Point::new(0.0, 0.0), Point::new(0.0, CLAUSE_HEIGHT - pitch(1.0))]
}

/// Clockwise octagon with its top-left corner at `top_left`, `a` steps
/// across, `b` steps down and one-step diagonals.
fn octagon(top_left: Point, a: usize, b: usize) -> Vec<Point> {
    let l = pitch(1.0);
    let s = l * FRAC_1_SQRT_2;
    let (a, b) = (a as f64 * l, b as f64 * l);
    let steps = [
        Point::new(a, 0.0),
        Point::new(s, -s),
        Point::new(0.0, -b),
        Point::new(-s, -s),
        Point::new(-a, 0.0),
        Point::new(-s, s),
        Point::new(0.0, b),
    ];
    let mut out = vec![top_left];
    for d in steps {
        out.push(*out.last().unwrap() + d);
    }
    out
}

fn mirror_x(v: &[Point]) -> Vec<Point> {
    v.iter().map(|p| Point::new(-p.x, p.y)).collect()
}

fn mirror_about(v: &[Point], axis: f64) -> Vec<Point> {
    v.iter().map(|p| Point::new(p.x, 2.0 * axis - p.y)).collect()
}

fn element_at(layout: &[Point], target: Point) -> Result<usize> {
    subdivide(layout, true, pitch(1.0))?
        .iter()
        .position(|x| x.dist(target) < 1e-6)
        .ok_or_else(|| construction(format!("no cycle element at {target}")))
}

fn scaled(e: Embedding, eps: f64) -> Embedding {
    let s = |v: &[Point]| v.iter().map(|p| p.scale(eps)).collect::<Vec<_>>();
    Embedding {
        cycles: e
            .cycles
            .iter()
            .map(|c| CycleLayout {
                variable: c.variable,
                vertices: s(&c.vertices),
            })
            .collect(),
        clauses: e
            .clauses
            .iter()
            .map(|c| ClausePlacement {
                anchor: c.anchor.scale(eps),
                ..*c
            })
            .collect(),
        routes: e
            .routes
            .iter()
            .map(|r| ChainRoute {
                vertices: s(&r.vertices),
                ..r.clone()
            })
            .collect(),
    }
}

/// The formula `(x or x or x)` with one cycle and one clause above it.
pub fn one_variable_template(eps: f64) -> Result<(Formula, Embedding)> {
    check_eps(eps)?;
    let x = 0;
    let formula = Formula::new(1, vec![[Literal::pos(x); 3]])?;
    let left = NEAR.vertices()?;
    let embedding = Embedding {
        cycles: vec![CycleLayout {
            variable: x,
            vertices: octagon(Point::new(-20.0, -1.0), 10, 2),
        }],
        clauses: vec![ClausePlacement {
            anchor: Point::new(0.0, CLAUSE_HEIGHT),
            orientation: 30f64.to_radians(),
            above: true,
        }],
        routes: vec![
            ChainRoute {
                clause: 0,
                slot: 0,
                host: 9,
                vertices: mirror_x(&left),
            },
            ChainRoute {
                clause: 0,
                slot: 1,
                host: 1,
                vertices: left,
            },
            ChainRoute {
                clause: 0,
                slot: 2,
                host: 5,
                vertices: middle_route(),
            },
        ],
    };
    Ok((formula, scaled(embedding, eps)))
}

/// The formula `(x or y or y) and (not x or not y or not y)`: one clause
/// above the variable line and its mirror image below.
pub fn two_variable_template(eps: f64) -> Result<(Formula, Embedding)> {
    check_eps(eps)?;
    let (x, y) = (0, 1);
    let formula = Formula::new(
        2,
        vec![
            [Literal::pos(y), Literal::pos(x), Literal::pos(y)],
            [Literal::neg(y), Literal::neg(x), Literal::neg(y)],
        ],
    )?;
    let l = pitch(1.0);
    let x_cycle = octagon(Point::new(-27.0, -1.0), 2, 2);
    let y_cycle = octagon(Point::new(-6.0, -1.0), 6, 2);
    let axis = -1.0 - l * FRAC_1_SQRT_2 - l;

    let right = mirror_x(&NEAR.vertices()?);
    let left = FAR.vertices()?;
    let middle = middle_route();
    // Host element whose tap starts the given route; taps sit up and to
    // the right of their host on the top side.
    let host_for = |layout: &[Point], route: &[Point], below: bool| -> Result<usize> {
        let dy = if below { 1.0 } else { -1.0 };
        element_at(layout, route[0] + Point::new(-RADIUS_FACTOR, dy))
    };
    let mut routes = Vec::new();
    for (slot, route, layout) in [(0, &right, &y_cycle), (1, &left, &x_cycle), (2, &middle, &y_cycle)] {
        routes.push(ChainRoute {
            clause: 0,
            slot,
            host: host_for(layout, route, false)?,
            vertices: route.clone(),
        });
    }
    for (slot, route, layout) in [(0, &middle, &y_cycle), (1, &left, &x_cycle), (2, &right, &y_cycle)] {
        let mirrored = mirror_about(route, axis);
        routes.push(ChainRoute {
            clause: 1,
            slot,
            host: host_for(layout, &mirrored, true)?,
            vertices: mirrored,
        });
    }
    let embedding = Embedding {
        cycles: vec![
            CycleLayout {
                variable: x,
                vertices: x_cycle,
            },
            CycleLayout {
                variable: y,
                vertices: y_cycle,
            },
        ],
        clauses: vec![
            ClausePlacement {
                anchor: Point::new(0.0, CLAUSE_HEIGHT),
                orientation: 30f64.to_radians(),
                above: true,
            },
            ClausePlacement {
                anchor: Point::new(0.0, 2.0 * axis - CLAUSE_HEIGHT),
                orientation: 90f64.to_radians(),
                above: false,
            },
        ],
        routes,
    };
    Ok((formula, scaled(embedding, eps)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::directed_hausdorff;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn square() -> Vec<Point> {
        // Points at side midpoints, discs at the corners.
        vec![pt(0., 3.5), pt(3.5, 3.5), pt(3.5, -3.5), pt(-3.5, -3.5), pt(-3.5, 3.5)]
    }

    #[test]
    fn square_cycle_realisations() {
        let c = build_cycle(&square(), 1.0).unwrap();
        assert_eq!((c.points.len(), c.discs.len()), (4, 4));
        assert!((directed_hausdorff(&c.points, &c.q0).unwrap() - 1.0).abs() < 1e-12);
        assert!((directed_hausdorff(&c.points, &c.q1).unwrap() - 1.0).abs() < 1e-12);
        let centres: Vec<Point> = c.discs.iter().map(|d| d.centre).collect();
        assert!((directed_hausdorff(&c.points, &centres).unwrap() - 3.5).abs() < 1e-12);
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(c.discs[i].centre.dist(c.discs[j].centre) > 5.0);
            }
        }
    }

    #[test]
    fn cycle_rejects_bad_layouts() {
        let short = [pt(0., 0.), pt(3.0, 0.), pt(3.0, 3.0)];
        assert!(matches!(build_cycle(&short, 1.0), Err(Error::Construction(_))));
        // Discs across a right-angled corner point overlap.
        let tight = [pt(0., 0.), pt(7., 0.), pt(7., 7.), pt(0., 7.)];
        assert!(matches!(build_cycle(&tight, 1.0), Err(Error::Construction(_))));
    }

    #[test]
    fn clause_geometry() {
        let c = build_clause(pt(1., 2.), 0.3, 1.0);
        for (k, s) in c.slots.iter().enumerate() {
            assert!((s.centre.dist(c.point) - 3.5).abs() < 1e-12);
            assert!((s.centre.dist(c.point) - s.radius - 1.0).abs() < 1e-12);
            let next = c.slots[(k + 1) % 3].centre;
            assert!((s.centre.dist(next) - 3.5 * 3f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn chain_taps_pick_parity() {
        let layout = octagon(pt(-20., -1.), 10, 2);
        let cyc = build_cycle(&layout, 1.0).unwrap();
        for negated in [false, true] {
            let tap = cyc.tap_point(5, negated, 1.0).unwrap();
            let (near, far) = if negated {
                (cyc.q0[2], cyc.q1[2])
            } else {
                (cyc.q1[2], cyc.q0[2])
            };
            assert!((tap.dist(near) - 1.0).abs() < 1e-12);
            assert!(tap.dist(far) > 1.0);
        }
        let tap = cyc.tap_point(5, false, 1.0).unwrap();
        let chain = build_chain(&cyc, 5, false, &[tap, tap + pt(0., 10.5)], 1.0).unwrap();
        assert_eq!(chain.elements.len(), 4);
        for k in 0..3 {
            let gap = chain.elements[k].dist(chain.elements[k + 1]) - 2.5;
            assert!((gap - 1.0).abs() < 1e-12);
        }
        assert!(build_chain(&cyc, 5, true, &[tap, tap + pt(0., 10.5)], 1.0).is_err());
        assert!(build_chain(&cyc, 5, false, &[tap, tap + pt(0., 7.0)], 1.0).is_err());
    }

    #[test]
    fn one_variable_template_witnesses() {
        let (f, e) = one_variable_template(1.0).unwrap();
        let inst = assemble(&f, &e, 1.0).unwrap();
        let q = witness_from_assignment(&inst, &[true]).unwrap();
        assert!((directed_hausdorff(&inst.p, &q).unwrap() - 1.0).abs() < 1e-9);
        let q = witness_from_assignment(&inst, &[false]).unwrap();
        assert!(directed_hausdorff(&inst.p, &q).unwrap() >= 3.0);
        assert!(clause_gap_check(&inst, 0));
        for m in clause_far_half_distances(&inst, 0) {
            assert!((m - 3.5).abs() < 1e-12);
        }
    }

    #[test]
    fn two_variable_template_witnesses() {
        let (f, e) = two_variable_template(1.0).unwrap();
        let inst = assemble(&f, &e, 1.0).unwrap();
        let sat = f.satisfying_assignments();
        assert_eq!(sat, vec![vec![true, false], vec![false, true]]);
        for a in &sat {
            let q = witness_from_assignment(&inst, a).unwrap();
            assert!((directed_hausdorff(&inst.p, &q).unwrap() - 1.0).abs() < 1e-9, "{a:?}");
        }
        assert!(clause_gap_check(&inst, 0) && clause_gap_check(&inst, 1));
    }

    #[test]
    fn templates_scale_with_epsilon() {
        let (f, e) = two_variable_template(0.25).unwrap();
        let inst = assemble(&f, &e, 0.25).unwrap();
        let q = witness_from_assignment(&inst, &[true, false]).unwrap();
        assert!((directed_hausdorff(&inst.p, &q).unwrap() - 0.25).abs() < 1e-9);
    }

    #[test]
    fn corrupted_clause_fails_gap_check() {
        let (f, e) = one_variable_template(1.0).unwrap();
        let mut inst = assemble(&f, &e, 1.0).unwrap();
        let rec = inst.clauses[0].clone();
        let p = inst.p[rec.point];
        let s = &mut inst.q[rec.slots[1]];
        s.centre = p + unit(s.centre - p).scale(2.6);
        assert!(!clause_gap_check(&inst, 0));
        assert!(clause_gap_check(&inst, 0) == (clause_far_half_distances(&inst, 0)[1] >= 3.0));
    }

    #[test]
    fn gap_check_is_rigid_motion_invariant() {
        let (f, e) = two_variable_template(1.0).unwrap();
        let inst = assemble(&f, &e, 1.0).unwrap();
        let moved = inst.transformed(0.7, pt(-3.0, 11.0));
        for c in 0..2 {
            let a = clause_far_half_distances(&inst, c);
            let b = clause_far_half_distances(&moved, c);
            for k in 0..3 {
                assert!((a[k] - b[k]).abs() < 1e-9);
            }
        }
        let rebuilt = assemble(&f, &e.transformed(0.7, pt(-3.0, 11.0)), 1.0).unwrap();
        assert_eq!(rebuilt.p.len(), inst.p.len());
    }

    #[test]
    fn close_routes_are_rejected() {
        let (f, mut e) = one_variable_template(1.0).unwrap();
        // Bring the left chain in beside the middle one.
        let tap = e.routes[1].vertices[0];
        let slot = *e.routes[1].vertices.last().unwrap();
        let v1 = tap + pt(0., 3.5);
        let v2 = v1 + pt(10.5, 0.);
        let bend = elbow(v2, slot, 3, 2, 3.5, 1.0).unwrap();
        e.routes[1].vertices = vec![tap, v1, v2, bend, slot];
        let err = assemble(&f, &e, 1.0).unwrap_err();
        assert!(
            matches!(err, Error::Construction(ref m) if m.contains("chain")),
            "{err}"
        );
    }

    #[test]
    fn assemble_rejects_incomplete_embeddings() {
        let (f, mut e) = one_variable_template(1.0).unwrap();
        e.routes.pop();
        assert!(assemble(&f, &e, 1.0).is_err());
        let (f, mut e) = one_variable_template(1.0).unwrap();
        e.cycles.clear();
        assert!(assemble(&f, &e, 1.0).is_err());
    }
}
