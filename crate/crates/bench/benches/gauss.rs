use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use markov_core::gauss::{g_compose, g_conditional, g_pushback, psd_pinv, random_gauss, random_psd, DEFAULT_CUTOFF};
use markov_core::seeded;
use std::hint::black_box;

fn bench_pinv(c: &mut Criterion) {
    let mut group = c.benchmark_group("psd_pinv");
    for n in [4, 16, 64] {
        let m = random_psd(n, n / 2, &mut seeded(n as u64));
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| psd_pinv(black_box(&m), DEFAULT_CUTOFF).unwrap())
        });
    }
    group.finish();
}

fn bench_morphisms(c: &mut Criterion) {
    let mut group = c.benchmark_group("gauss");
    for n in [4, 16, 64] {
        let mut rng = seeded(n as u64);
        let (f, g) = (random_gauss(n, n, &mut rng), random_gauss(n, n, &mut rng));
        let state = random_gauss(0, 2 * n, &mut rng);
        group.bench_with_input(BenchmarkId::new("compose", n), &n, |b, _| {
            b.iter(|| g_compose(black_box(&g), black_box(&f)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("conditional", n), &n, |b, _| {
            b.iter(|| g_conditional(black_box(&state), n, DEFAULT_CUTOFF).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("pushback", n), &n, |b, _| b.iter(|| g_pushback(black_box(&f))));
    }
    group.finish();
}

criterion_group!(benches, bench_pinv, bench_morphisms);
criterion_main!(benches);
