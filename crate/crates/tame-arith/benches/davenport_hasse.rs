use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use group_core::exec::Strategy;
use tame_arith::{check_dh_i_batch, check_dh_iii_batch, TameField, TypeThreeSetup};

fn first_lemma(c: &mut Criterion) {
    let mut group = c.benchmark_group("dh_i_batch");
    group.sample_size(10);
    for (q, e, f) in [(9, 1, 2), (13, 3, 1), (16, 1, 3), (11, 5, 1)] {
        let base = TameField::base(q, 0).unwrap();
        let k = base.extension(e, f).unwrap();
        let chars = base.characters(2 * k.degree());
        let id = format!("q={q} e={e} f={f}");
        for (label, strategy) in [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, &id), &chars, |b, chars| {
                b.iter(|| check_dh_i_batch(&k, chars, strategy).unwrap())
            });
        }
    }
    group.finish();
}

fn third_lemma(c: &mut Criterion) {
    let mut group = c.benchmark_group("dh_iii_batch");
    group.sample_size(10);
    for (q, ell) in [(2, 3), (3, 5), (2, 7)] {
        let setup = TypeThreeSetup::new(&TameField::base(q, 0).unwrap(), ell).unwrap();
        let chars = setup.base.characters(2 * ell);
        let id = format!("q={q} ell={ell}");
        for (label, strategy) in [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, &id), &chars, |b, chars| {
                b.iter(|| check_dh_iii_batch(&setup, chars, strategy).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, first_lemma, third_lemma);
criterion_main!(benches);
