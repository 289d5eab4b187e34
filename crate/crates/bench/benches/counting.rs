use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use regulus_core::partitions::{partition_mod_table, regular_mod_table};
use regulus_core::verify::{run_check, CheckParams};

fn pentagonal_recurrence(c: &mut Criterion) {
    let mut group = c.benchmark_group("partition-table-mod13");
    group.sample_size(10);
    for n in [100_000usize, 1_000_000] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, &n| {
            bench.iter(|| partition_mod_table(13, n));
        });
    }
    group.finish();
}

fn regular_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("regular-table");
    group.sample_size(10);
    for l in [13u64, 23] {
        group.bench_with_input(BenchmarkId::from_parameter(l), &l, |bench, &l| {
            bench.iter(|| regular_mod_table(l, 500_000).unwrap());
        });
    }
    group.finish();
}

fn representative_checks(c: &mut Criterion) {
    let mut group = c.benchmark_group("check");
    group.sample_size(10);
    let params = CheckParams {
        order: 500,
        n_max: 50,
        max_order: CheckParams::DEFAULT_MAX_ORDER,
    };
    for name in ["t13-gf", "t13-expand", "t23-4.3", "id-2.3"] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &name, |bench, name| {
            bench.iter(|| run_check(name, &params).unwrap());
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    pentagonal_recurrence,
    regular_table,
    representative_checks
);
criterion_main!(benches);
