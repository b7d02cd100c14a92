use criterion::{criterion_group, criterion_main, Criterion, Throughput};
use std::hint::black_box;

use nontransitive_core::{estimate, sample_ordered_cyclic, EstimatorSpec, Target};

const SAMPLES: u64 = 200_000;

fn bench_estimators(c: &mut Criterion) {
    let mut group = c.benchmark_group("estimate");
    group.throughput(Throughput::Elements(SAMPLES));
    group.sample_size(20);
    for (name, target) in [
        ("p3", Target::P3),
        ("p3_star", Target::P3Star),
        ("dn_star_6", Target::VolDnStar(6)),
        ("bracket_6", Target::PnBracket(6)),
    ] {
        for chunks in [1usize, 8] {
            group.bench_function(format!("{name}/chunks={chunks}"), |b| {
                b.iter(|| {
                    estimate(&EstimatorSpec::new(target, SAMPLES, black_box(42), chunks)).unwrap()
                })
            });
        }
    }
    group.finish();
}

fn bench_sampler(c: &mut Criterion) {
    let mut group = c.benchmark_group("sampler");
    group.throughput(Throughput::Elements(100_000));
    group.sample_size(20);
    group.bench_function("ordered_cyclic_100k", |b| {
        b.iter(|| sample_ordered_cyclic(100_000, black_box(7)))
    });
    group.finish();
}

criterion_group!(benches, bench_estimators, bench_sampler);
criterion_main!(benches);
