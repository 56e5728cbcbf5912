use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hypertree_core::{brute_force_counts, build_a, hyperstar, matching_polynomial};

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("matching_polynomial");
    for (m, k, r) in [(8, 4, 2), (13, 9, 4), (40, 20, 3)] {
        let a = build_a(m, k, r).unwrap();
        group.bench_with_input(BenchmarkId::new("A", format!("{m},{k},{r}")), &a, |b, a| {
            b.iter(|| matching_polynomial(black_box(a)))
        });
    }
    let star = hyperstar(50, 3).unwrap();
    group.bench_function("star 50 r=3", |b| b.iter(|| matching_polynomial(black_box(&star))));
    group.finish();

    let a = build_a(8, 4, 3).unwrap();
    c.bench_function("brute force A(8,4,3)", |b| b.iter(|| brute_force_counts(black_box(&a)).unwrap()));
}

criterion_group!(benches, matching);
criterion_main!(benches);
