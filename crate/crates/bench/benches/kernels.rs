use criterion::{criterion_group, criterion_main, BatchSize, Criterion, Throughput};
use std::hint::black_box;

use faddeeva::oracle::quadrature_w;
use faddeeva::{w, w_laplace_cf, w_rational, w_small_y, CoeffSet, Complex64, DEFAULT_CF_DEPTH};
use faddeeva_bench::{band_points, box_points, primary_inner_points};

fn bench_kernels(c: &mut Criterion) {
    let coeffs = CoeffSet::operating_point();
    let band = band_points(4096, 1);
    let inner = primary_inner_points(4096, 2);
    let external = box_points(4096, 10_000.0, 3);

    let mut group = c.benchmark_group("kernels");
    group.throughput(Throughput::Elements(band.len() as u64));
    group.bench_function("small_y_band", |b| {
        b.iter(|| {
            for &z in &band {
                black_box(w_small_y(black_box(z), coeffs));
            }
        })
    });
    group.bench_function("rational_inner", |b| {
        b.iter(|| {
            for &z in &inner {
                black_box(w_rational(black_box(z), coeffs));
            }
        })
    });
    group.bench_function("laplace_cf_external", |b| {
        b.iter(|| {
            for &z in &external {
                black_box(w_laplace_cf(black_box(z), DEFAULT_CF_DEPTH));
            }
        })
    });
    group.finish();
}

fn bench_dispatch(c: &mut Criterion) {
    let mut group = c.benchmark_group("dispatch");
    for (label, points) in [
        ("band", band_points(4096, 11)),
        ("box15", box_points(4096, 15.0, 12)),
        ("box10k", box_points(4096, 10_000.0, 13)),
    ] {
        group.throughput(Throughput::Elements(points.len() as u64));
        group.bench_function(label, |b| {
            b.iter_batched(
                || points.clone(),
                |pts| {
                    for z in pts {
                        black_box(w(black_box(z)).unwrap());
                    }
                },
                BatchSize::LargeInput,
            )
        });
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(20);
    for (label, z) in [
        ("quadrature_band_mid", Complex64::new(3.0, 0.05)),
        ("quadrature_band_edge", Complex64::new(7.9, 0.01)),
        ("quadrature_inner", Complex64::new(4.0, 4.0)),
    ] {
        group.bench_function(label, |b| {
            b.iter(|| black_box(quadrature_w(black_box(z), 1e-15).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_kernels, bench_dispatch, bench_oracle);
criterion_main!(benches);
