use criterion::{criterion_group, criterion_main, Criterion};
use hypertree_core::{enumerate_hypertrees, verify_extremal};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    for (m, r) in [(8, 2), (6, 3), (5, 4)] {
        group.bench_function(format!("hypertrees m={m} r={r}"), |b| b.iter(|| enumerate_hypertrees(m, r).unwrap()));
    }
    group.bench_function("verify 6,3,3", |b| b.iter(|| verify_extremal(6, 3, 3, false).unwrap()));
    group.finish();
}

criterion_group!(benches, enumeration);
criterion_main!(benches);
