//! Grid-sweep benchmarks: rayon data-parallel path vs the sequential fallback.
//!
//! With the default `parallel` feature both paths are measured side by side;
//! with `--no-default-features` only the sequential path exists and is
//! benchmarked alone.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use cwlab_core::{
    hausdorff_seq, reuleaux_polygon, reuleaux_simplex, reuleaux_triangle, support_profile_seq,
    width_report_seq, Body, Dim, DirectionGrid, Point,
};

fn bench_support_profile(c: &mut Criterion) {
    let body = reuleaux_polygon(3).unwrap();
    let grid = DirectionGrid::new(Dim::Two, 4096).unwrap();
    let mut group = c.benchmark_group("support_profile_2d_m4096");
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| cwlab_core::support_profile(black_box(&body), black_box(&grid)).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| support_profile_seq(black_box(&body), black_box(&grid)).unwrap())
    });
    group.finish();
}

fn bench_width_report(c: &mut Criterion) {
    let body = reuleaux_simplex().unwrap();
    let grid = DirectionGrid::new(Dim::Three, 4096).unwrap();
    let mut group = c.benchmark_group("width_report_3d_m4096");
    group.sample_size(20);
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| cwlab_core::width_report(black_box(&body), black_box(&grid)).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| width_report_seq(black_box(&body), black_box(&grid)).unwrap())
    });
    group.finish();
}

fn bench_hausdorff(c: &mut Criterion) {
    let a = reuleaux_triangle(1.0).unwrap();
    let b = Body::ball(Point::new2(0.0, 0.0), 1.0).unwrap();
    let grid = DirectionGrid::new(Dim::Two, 8192).unwrap();
    let mut group = c.benchmark_group("hausdorff_2d_m8192");
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |bch| {
        bch.iter(|| cwlab_core::hausdorff(black_box(&a), black_box(&b), black_box(&grid)).unwrap())
    });
    group.bench_function("sequential", |bch| {
        bch.iter(|| hausdorff_seq(black_box(&a), black_box(&b), black_box(&grid)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_support_profile, bench_width_report, bench_hausdorff);
criterion_main!(benches);
