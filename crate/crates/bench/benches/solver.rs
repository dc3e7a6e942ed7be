use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use unambig_bench::{alpha_m, non_fixed_points, running_example, succinct};
use unambig_core::explorer::search_sigma_ij;
use unambig_core::{is_ambiguous, is_fixed_point, Budget, SearchMode};

fn ambiguity(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_ambiguous");
    let (alpha0, ambiguous, unambiguous) = running_example();
    group.bench_function("running_example/witness", |b| {
        b.iter(|| is_ambiguous(black_box(&ambiguous), &alpha0, SearchMode::ERASING, Budget::default()))
    });
    group.bench_function("running_example/exhaustive", |b| {
        b.iter(|| is_ambiguous(black_box(&unambiguous), &alpha0, SearchMode::ERASING, Budget::default()))
    });
    for m in [4, 6, 8] {
        let (alpha, sigma) = alpha_m(m);
        group.bench_with_input(BenchmarkId::new("alpha_m", m), &m, |b, _| {
            b.iter(|| is_ambiguous(black_box(&sigma), &alpha, SearchMode::ERASING, Budget::default()))
        });
    }
    for n in [4, 6, 8] {
        let (alpha, sigma) = succinct(n);
        group.bench_with_input(BenchmarkId::new("shortest_succinct", n), &n, |b, _| {
            b.iter(|| is_ambiguous(black_box(&sigma), &alpha, SearchMode::ERASING, Budget::default()))
        });
    }
    group.finish();
}

fn fixed_points(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_fixed_point");
    for alpha in non_fixed_points() {
        group.bench_with_input(BenchmarkId::from_parameter(alpha.len()), &alpha, |b, a| {
            b.iter(|| is_fixed_point(black_box(a), Budget::default()))
        });
    }
    group.finish();
}

fn sigma_ij(c: &mut Criterion) {
    let alpha = &non_fixed_points()[1];
    c.bench_function("search_sigma_ij/alpha2", |b| {
        b.iter(|| search_sigma_ij(black_box(alpha), Budget::default()))
    });
}

criterion_group!(benches, ambiguity, fixed_points, sigma_ij);
criterion_main!(benches);
