//! Seeded instance generators shared by the benchmarks.

use hdimp_core::{Disc, Point};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_points(seed: u64, m: usize, size: f64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..m)
        .map(|_| Point::new(rng.gen_range(0.0..size), rng.gen_range(0.0..size)))
        .collect()
}

/// Discs with centres in `[0, size]^2` and radii in `[0.2, 1.5]`; overlaps allowed.
pub fn random_discs(seed: u64, n: usize, size: f64) -> Vec<Disc> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let c = Point::new(rng.gen_range(0.0..size), rng.gen_range(0.0..size));
            Disc::new(c, rng.gen_range(0.2..1.5))
        })
        .collect()
}

/// Unit discs on a jittered square grid of pitch 3, hence pairwise disjoint,
/// with `m` points planted within `d` of their boundaries.
pub fn planted_disjoint(seed: u64, n: usize, m: usize, d: f64) -> (Vec<Point>, Vec<Disc>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side = (n as f64).sqrt().ceil() as usize;
    let q: Vec<Disc> = (0..n)
        .map(|i| {
            let c = Point::new(3.0 * (i % side) as f64, 3.0 * (i / side) as f64);
            Disc::new(c + Point::new(rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3)), 1.0)
        })
        .collect();
    let p = (0..m)
        .map(|_| {
            let disc = q[rng.gen_range(0..n)];
            let a = rng.gen_range(0.0..std::f64::consts::TAU);
            disc.boundary_at(a) + Point::polar(rng.gen_range(0.0..std::f64::consts::TAU)).scale(d * rng.gen::<f64>())
        })
        .collect();
    (p, q)
}
