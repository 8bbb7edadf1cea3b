use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hdimp_bench::{planted_disjoint, random_discs, random_points};
use hdimp_core::{hmax, hmin_dispatch, independent_sets, lower_approx::grown_discs, CoverRoutine, Tolerance};

fn upper(c: &mut Criterion) {
    let tol = Tolerance::default();
    let mut group = c.benchmark_group("hmax");
    for size in [25, 50, 100, 200] {
        let p = random_discs(1, size, 10.0);
        let q = random_discs(2, size, 10.0);
        group.bench_with_input(BenchmarkId::from_parameter(size), &size, |b, _| {
            b.iter(|| hmax(&p, &q, &tol).unwrap())
        });
    }
    group.finish();
}

fn exact_lower(c: &mut Criterion) {
    let tol = Tolerance::default();
    let mut group = c.benchmark_group("independent_sets");
    group.sample_size(20);
    for n in [4, 9, 16] {
        let (p, q) = planted_disjoint(3, n, 2 * n, 0.05);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| independent_sets(&p, &q, &tol).unwrap())
        });
    }
    group.finish();
}

fn approx_lower(c: &mut Criterion) {
    let tol = Tolerance::default();
    let mut group = c.benchmark_group("grown_discs");
    group.sample_size(20);
    for n in [3, 6, 12] {
        let p = random_points(4, 2 * n, 10.0);
        let q = random_discs(5, n, 10.0);
        group.bench_with_input(BenchmarkId::new("gonzalez", n), &n, |b, _| {
            b.iter(|| grown_discs(&p, &q, CoverRoutine::Gonzalez, &tol).unwrap())
        });
    }
    for n in [4, 9] {
        let (p, q) = planted_disjoint(6, n, 2 * n, 0.3);
        group.bench_with_input(BenchmarkId::new("dispatch_unit_discs", n), &n, |b, _| {
            b.iter(|| hmin_dispatch(&p, &q, &tol).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, upper, exact_lower, approx_lower);
criterion_main!(benches);
