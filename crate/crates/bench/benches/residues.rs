// SPDX-License-Identifier: Apache-2.0

use std::hint::black_box;

use biquad_core::{
    classify, residue_set, set_of_sums_bruteforce, sum_of_residues, BiquadraticPoly, PrimeModulus,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_sums(c: &mut Criterion) {
    let mut group = c.benchmark_group("sum of residues");
    for p in [101u64, 499, 7919] {
        let p = PrimeModulus::new(p).unwrap();
        let f = BiquadraticPoly::new(3, 5, 2);
        group.bench_with_input(BenchmarkId::new("brute force", p), &p, |b, &p| {
            b.iter(|| residue_set(black_box(&f), p).sum_mod_p())
        });
        group.bench_with_input(BenchmarkId::new("closed form", p), &p, |b, &p| {
            b.iter(|| sum_of_residues(black_box(&f), p).unwrap())
        });
    }
    group.finish();
}

fn bench_set_of_sums(c: &mut Criterion) {
    let mut group = c.benchmark_group("set of sums");
    for p in [101u64, 499] {
        let p = PrimeModulus::new(p).unwrap();
        group.bench_with_input(BenchmarkId::new("brute force", p), &p, |b, &p| {
            b.iter(|| set_of_sums_bruteforce(black_box(p)))
        });
        group.bench_with_input(BenchmarkId::new("classify", p), &p, |b, &p| {
            b.iter(|| classify(black_box(p)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sums, bench_set_of_sums);
criterion_main!(benches);
