use cornerpack::{compact, enumerate_corners, placement_order, solve, RectDims, SolverConfig};
use cornerpack_bench::{half_prefix, loose, crowded_squares, tiling};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn bench_solve(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve");
    for n in [4, 6, 8] {
        let inst = tiling(8, n, 1);
        for enhanced in [true, false] {
            let cfg = SolverConfig {
                enhanced_pruning: enhanced,
                ..SolverConfig::default()
            };
            let id = BenchmarkId::new(if enhanced { "tiling/enhanced" } else { "tiling/plain" }, n);
            g.bench_with_input(id, &inst, |b, inst| b.iter(|| solve(black_box(inst), &cfg)));
        }
    }
    for k in [1, 2, 3] {
        let inst = crowded_squares(k);
        g.bench_with_input(BenchmarkId::new("infeasible", k), &inst, |b, inst| {
            b.iter(|| solve(black_box(inst), &SolverConfig::default()))
        });
    }
    g.finish();
}

fn bench_compact(c: &mut Criterion) {
    let mut g = c.benchmark_group("compact");
    for n in [8, 32, 128] {
        let p = loose(64, n, 2);
        g.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| compact(black_box(p)).unwrap())
        });
    }
    g.finish();
}

fn bench_decompose(c: &mut Criterion) {
    let mut g = c.benchmark_group("placement_order");
    for n in [8, 32, 128] {
        let (p, _) = compact(&loose(64, n, 3)).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| placement_order(black_box(p)).unwrap())
        });
    }
    g.finish();
}

fn bench_corners(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_corners");
    let shape = RectDims::new(3, 2).unwrap();
    for n in [8, 32, 128] {
        let prefix = half_prefix(64, n, 4);
        g.bench_with_input(BenchmarkId::from_parameter(n), &prefix, |b, prefix| {
            b.iter(|| enumerate_corners(black_box(prefix), shape))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_solve, bench_compact, bench_decompose, bench_corners);
criterion_main!(benches);
