//! Seeded instance generators.

use clap::ValueEnum;
use hdimp_core::gadgets::{assemble, one_variable_template, two_variable_template};
use hdimp_core::lower_exact::SmallThreshold;
use hdimp_core::{Disc, Point};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::document::{InstanceDocument, Side};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideKind {
    Precise,
    Imprecise,
}

#[derive(Clone, Debug)]
pub struct RandomParams {
    pub m: usize,
    pub n: usize,
    pub size: f64,
    pub radius: (f64, f64),
    pub p_kind: SideKind,
    pub q_kind: SideKind,
    /// Discs on each imprecise side are pairwise disjoint.
    pub disjoint: bool,
    /// Every disc has radius 1.
    pub unit: bool,
}

#[derive(Clone, Debug)]
pub struct PlantedParams {
    pub n: usize,
    /// Extra points beyond the one forcing point per disc.
    pub extra: usize,
    pub size: f64,
    pub radius: (f64, f64),
    pub target: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Template {
    /// The single clause (x or x or x).
    OneVariable,
    TwoVariable,
}

const MAX_ATTEMPTS: usize = 10_000;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::Malformed(msg()))
    }
}

fn check_radius((lo, hi): (f64, f64)) -> Result<(), CliError> {
    check(lo.is_finite() && hi.is_finite() && 0.0 <= lo && lo <= hi, || {
        format!("radius range [{lo}, {hi}] is invalid")
    })
}

fn random_point(rng: &mut ChaCha8Rng, size: f64) -> Point {
    Point::new(rng.gen_range(0.0..=size), rng.gen_range(0.0..=size))
}

fn random_radius(rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)) -> f64 {
    if lo == hi {
        lo
    } else {
        rng.gen_range(lo..hi)
    }
}

/// Places `radii.len()` discs in the box, rejecting overlaps and gaps below `gap`.
fn disjoint_discs(rng: &mut ChaCha8Rng, radii: &[f64], size: f64, gap: f64) -> Result<Vec<Disc>, CliError> {
    let mut out: Vec<Disc> = Vec::with_capacity(radii.len());
    for &r in radii {
        let mut placed = false;
        for _ in 0..MAX_ATTEMPTS {
            let d = Disc::new(random_point(rng, size), r);
            if out.iter().all(|o| o.centre.dist(d.centre) > o.radius + d.radius + gap) {
                out.push(d);
                placed = true;
                break;
            }
        }
        check(placed, || {
            format!("could not place {} disjoint discs in a box of size {size}", radii.len())
        })?;
    }
    Ok(out)
}

fn random_side(rng: &mut ChaCha8Rng, count: usize, kind: SideKind, params: &RandomParams) -> Result<Side, CliError> {
    Ok(match kind {
        SideKind::Precise => Side::precise(&(0..count).map(|_| random_point(rng, params.size)).collect::<Vec<_>>()),
        SideKind::Imprecise => {
            let radii: Vec<f64> = (0..count)
                .map(|_| {
                    if params.unit {
                        1.0
                    } else {
                        random_radius(rng, params.radius)
                    }
                })
                .collect();
            let discs = if params.disjoint {
                disjoint_discs(rng, &radii, params.size, 0.0)?
            } else {
                radii
                    .iter()
                    .map(|&r| Disc::new(random_point(rng, params.size), r))
                    .collect()
            };
            Side::imprecise(&discs)
        }
    })
}

pub fn generate_random(params: &RandomParams, seed: u64) -> Result<InstanceDocument, CliError> {
    check(params.m > 0 && params.n > 0, || "m and n must be positive".into())?;
    check(params.size.is_finite() && params.size > 0.0, || {
        format!("box size {} is invalid", params.size)
    })?;
    check_radius(params.radius)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_side(&mut rng, params.m, params.p_kind, params)?;
    let q = random_side(&mut rng, params.n, params.q_kind, params)?;
    let mut doc = InstanceDocument::new(p, q);
    doc.name = Some(format!("random-{seed}"));
    Ok(doc)
}

/// Disjoint discs with a precise P whose `h_min` is exactly `target`.
///
/// Each disc gets one point at distance `target` outside its boundary, with
/// every other disc farther away; extra points sit inside discs, within
/// `target` of the boundary point facing the forcing point.
pub fn generate_planted(params: &PlantedParams, seed: u64) -> Result<InstanceDocument, CliError> {
    check(params.n > 0, || "n must be positive".into())?;
    check_radius(params.radius)?;
    check(params.radius.0 > 0.0, || "planted discs need a positive radius".into())?;
    let threshold = SmallThreshold::value(params.radius.0);
    check(params.target > 0.0 && params.target < threshold, || {
        format!("target {} must lie in (0, {threshold})", params.target)
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let radii: Vec<f64> = (0..params.n).map(|_| random_radius(&mut rng, params.radius)).collect();
    let q = disjoint_discs(&mut rng, &radii, params.size, 2.0 * params.target)?;
    let angles: Vec<f64> = (0..params.n)
        .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
        .collect();
    let mut p: Vec<Point> = q
        .iter()
        .zip(&angles)
        .map(|(d, &a)| d.centre + Point::polar(a).scale(d.radius + params.target))
        .collect();
    for _ in 0..params.extra {
        let i = rng.gen_range(0..params.n);
        let anchor = q[i].boundary_at(angles[i]);
        let off =
            Point::polar(rng.gen_range(0.0..std::f64::consts::TAU)).scale(params.target * rng.gen::<f64>().sqrt());
        p.push(anchor + off);
    }
    let mut doc = InstanceDocument::new(Side::precise(&p), Side::imprecise(&q));
    doc.name = Some(format!("planted-{seed}"));
    Ok(doc)
}

pub fn generate_gadget(template: Template, eps: f64) -> Result<InstanceDocument, CliError> {
    check(eps.is_finite() && eps > 0.0, || {
        format!("epsilon {eps} must be positive")
    })?;
    let (formula, embedding) = match template {
        Template::OneVariable => one_variable_template(eps)?,
        Template::TwoVariable => two_variable_template(eps)?,
    };
    let inst = assemble(&formula, &embedding, eps)?;
    let mut doc = InstanceDocument::new(Side::precise(&inst.p), Side::imprecise(&inst.q));
    doc.name = Some(
        match template {
            Template::OneVariable => "gadget-one-variable",
            Template::TwoVariable => "gadget-two-variable",
        }
        .into(),
    );
    doc.epsilon = Some(eps);
    Ok(doc)
}
