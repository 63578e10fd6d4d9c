use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use extend_engine::{check_conditions, extend, DeltaFunction, ExtendOptions, FreeAbelian, ValueGroup};
use group_core::catalog;
use group_core::exec::Strategy;

fn free_oracle(name: &str) -> DeltaFunction<FreeAbelian> {
    let g = catalog::by_name(name).unwrap();
    DeltaFunction::from_fn(&g, &g.trivial(), |chi| if chi.is_trivial() { FreeAbelian::one() } else { FreeAbelian::symbol("s") })
        .unwrap()
}

fn conditions(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_conditions");
    group.sample_size(10);
    for name in ["S3", "D4", "A4", "S4", "C5:C4"] {
        let delta = free_oracle(name);
        for (label, strategy) in [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, name), &delta, |b, d| b.iter(|| check_conditions(d, strategy).unwrap()));
        }
    }
    group.finish();
}

fn extension(c: &mut Criterion) {
    let mut group = c.benchmark_group("extend");
    group.sample_size(10);
    for name in ["D4", "A4", "S4"] {
        let delta = free_oracle(name);
        for (label, strategy) in [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)] {
            let options = ExtendOptions { strategy, ..ExtendOptions::default() };
            group.bench_with_input(BenchmarkId::new(label, name), &delta, |b, d| b.iter(|| extend(d, options).unwrap()));
        }
    }
    group.finish();
}

criterion_group!(benches, conditions, extension);
criterion_main!(benches);
