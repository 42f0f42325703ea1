use std::hint::black_box;

use cellman_bench::search_targets;
use cellman_core::classification::{
    brute_force_enumerate, enumerate_excess1, enumerate_reducible_excess2,
};
use cellman_core::gale::gale_search;
use criterion::{criterion_group, criterion_main, Criterion};

fn gale(c: &mut Criterion) {
    let mut group = c.benchmark_group("gale_search");
    for (name, lattice) in search_targets() {
        group.bench_function(name, |b| {
            b.iter(|| gale_search(black_box(&lattice)).unwrap())
        });
    }
    group.finish();
}

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("excess1_d6", |b| {
        b.iter(|| enumerate_excess1(black_box(6)).unwrap())
    });
    group.bench_function("excess2_d6", |b| {
        b.iter(|| enumerate_reducible_excess2(black_box(6), false).unwrap())
    });
    group.bench_function("oracle_d2_n5", |b| {
        b.iter(|| brute_force_enumerate(2, black_box(5)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, gale, enumerate);
criterion_main!(benches);
