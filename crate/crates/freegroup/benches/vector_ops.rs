//! Sequential vs parallel elementwise operations.
//!
//! Run with `cargo bench -p freegroup`; drop `--features parallel` builds
//! down to the sequential baseline only with
//! `cargo bench -p freegroup --no-default-features`.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use freegroup::{rfree, RandomSpec, Word, WordVector};

const SIZES: [usize; 2] = [1_000, 50_000];

fn vectors(n: usize) -> (WordVector, WordVector) {
    let spec = RandomSpec {
        count: n,
        syllables: 6,
        max_symbol: 4,
        max_abs_exponent: 4,
        seed: 1,
    };
    let u = rfree(&spec).unwrap();
    let v = rfree(&spec.with_seed(2)).unwrap();
    (u, v)
}

fn bench_zip_concat(c: &mut Criterion) {
    let mut group = c.benchmark_group("zip_concat");
    for n in SIZES {
        let (u, v) = vectors(n);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, _| {
            b.iter(|| {
                black_box(
                    u.zip_with_sequential(&v, |a, b| a.concat(b))
                        .unwrap(),
                )
            })
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, _| {
            b.iter(|| black_box(u.zip_with_parallel(&v, |a, b| a.concat(b)).unwrap()))
        });
    }
    group.finish();
}

fn bench_conjugate_by_scalar(c: &mut Criterion) {
    let mut group = c.benchmark_group("conjugate_by_scalar");
    let z = WordVector::from(Word::reduce([(1u64, 2i64), (3, -1)]).unwrap());
    for n in SIZES {
        let (u, _) = vectors(n);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, _| {
            b.iter(|| {
                black_box(
                    u.zip_with_sequential(&z, |a, b| a.conjugate(b))
                        .unwrap(),
                )
            })
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, _| {
            b.iter(|| black_box(u.zip_with_parallel(&z, |a, b| a.conjugate(b)).unwrap()))
        });
    }
    group.finish();
}

fn bench_sum(c: &mut Criterion) {
    let mut group = c.benchmark_group("sum");
    for n in SIZES {
        let (u, _) = vectors(n);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, _| {
            b.iter(|| black_box(u.sum_sequential().unwrap()))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, _| {
            b.iter(|| black_box(u.sum_parallel().unwrap()))
        });
    }
    group.finish();
}

fn bench_reduce(c: &mut Criterion) {
    // single-word hot path: one long raw sequence through the stack reducer
    let mut group = c.benchmark_group("reduce");
    for n in SIZES {
        let raw: Vec<(u64, i64)> = (0..n)
            .map(|i| (i as u64 % 3 + 1, if i % 2 == 0 { 2 } else { -2 }))
            .collect();
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| black_box(Word::reduce(raw.iter().copied()).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_zip_concat,
    bench_conjugate_by_scalar,
    bench_sum,
    bench_reduce
);
criterion_main!(benches);
