use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hypertree_core::{build_a, rho_bound, spectral_radius_polyroot, spectral_radius_power, PowerOptions};

fn spectral(c: &mut Criterion) {
    let opts = PowerOptions::default();
    let mut group = c.benchmark_group("spectral_radius");
    for (m, k, r) in [(8, 4, 2), (13, 9, 4), (30, 12, 3)] {
        let a = build_a(m, k, r).unwrap();
        let id = format!("{m},{k},{r}");
        group.bench_with_input(BenchmarkId::new("power", &id), &a, |b, a| {
            b.iter(|| spectral_radius_power(black_box(a), &opts).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("polyroot", &id), &a, |b, a| {
            b.iter(|| spectral_radius_polyroot(black_box(a)).unwrap())
        });
        group.bench_function(BenchmarkId::new("bound", &id), |b| b.iter(|| rho_bound(black_box(m), k, r).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, spectral);
criterion_main!(benches);
