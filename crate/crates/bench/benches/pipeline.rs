use std::hint::black_box;

use amf_core::arith::{certificate_from_basis, SearchBounds};
use amf_core::ecoord::ecoord_basis;
use amf_core::harmonic::basis;
use amf_core::hecke::hecke_matrix;
use amf_core::Variant;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bases(c: &mut Criterion) {
    let mut g = c.benchmark_group("basis");
    g.sample_size(10);
    for l in [12u32, 20, 30] {
        g.bench_with_input(BenchmarkId::new("main", l), &l, |b, &l| b.iter(|| basis(black_box(l), Variant::Plus)));
        g.bench_with_input(BenchmarkId::new("ecoord", l), &l, |b, &l| {
            b.iter(|| ecoord_basis(black_box(l), Variant::Plus).unwrap())
        });
    }
    g.finish();
}

fn hecke(c: &mut Criterion) {
    let mut g = c.benchmark_group("hecke");
    g.sample_size(10);
    let b = basis(16, Variant::Gamma);
    for p in [2u64, 3, 7] {
        g.bench_with_input(BenchmarkId::new("l16", p), &p, |bench, &p| {
            bench.iter(|| hecke_matrix(black_box(p), &b).unwrap())
        });
    }
    g.finish();
}

fn certificates(c: &mut Criterion) {
    let mut g = c.benchmark_group("certificate");
    g.sample_size(10);
    for l in [20u32, 30] {
        let b = basis(l, Variant::Plus).basis;
        g.bench_with_input(BenchmarkId::from_parameter(l), &l, |bench, &l| {
            bench.iter(|| certificate_from_basis(l, black_box(&b), SearchBounds::default()).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bases, hecke, certificates);
criterion_main!(benches);
