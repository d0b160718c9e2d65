use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use crossing_core::{check_all, count_bounded_patterns, generate, sigma_bound, Bounds, DEFAULT_CAP};

const PARAMETERS: &[&[i64]] = &[&[2, 3], &[1, 1, 1], &[2, 1, 2], &[1, 1, 1, 1], &[1, 2, 1, 1]];

fn label(c: &[i64]) -> String {
    c.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn bench_generate(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("generate");
    for c in PARAMETERS {
        let bounds = Bounds::zero_lower(c.to_vec()).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(label(c)), &bounds, |b, bounds| {
            b.iter(|| generate(black_box(bounds), DEFAULT_CAP).unwrap())
        });
    }
    group.finish();
}

fn bench_count(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("count_bounded_patterns");
    for c in [&[3, 3, 3, 3][..], &[2, 2, 2, 2, 2], &[1, 2, 1, 2, 1, 2]] {
        let a = sigma_bound(c);
        group.bench_with_input(BenchmarkId::from_parameter(label(c)), &a, |b, a| {
            b.iter(|| count_bounded_patterns(black_box(a)))
        });
    }
    group.finish();
}

fn bench_axioms(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("check_all");
    group.sample_size(20);
    for c in PARAMETERS {
        let g = generate(&Bounds::zero_lower(c.to_vec()).unwrap(), DEFAULT_CAP).unwrap().to_digraph();
        group.bench_with_input(BenchmarkId::from_parameter(label(c)), &g, |b, g| {
            b.iter(|| check_all(black_box(g), true))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_generate, bench_count, bench_axioms);
criterion_main!(benches);
