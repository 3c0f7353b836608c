//! Recurrence generation versus oracle convolution at 128 bits.

use std::hint::black_box;

use besselprod::oracle::oracle_coeffs;
use besselprod::recurrence::shipped_correction;
use besselprod::generate;
use besselprod_bench::{family, params, CONVOLUTION_SIZES, FAMILIES, RECURRENCE_SIZES};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

fn recurrence(c: &mut Criterion) {
    let mut group = c.benchmark_group("recurrence");
    group.sample_size(10);
    for name in FAMILIES {
        let f = family(name);
        let p = params(f);
        let _ = shipped_correction(f);
        for n in RECURRENCE_SIZES {
            group.throughput(Throughput::Elements(n as u64));
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| b.iter(|| generate(f, &p, black_box(n - 1)).unwrap()));
        }
    }
    group.finish();
}

fn convolution(c: &mut Criterion) {
    let mut group = c.benchmark_group("convolution");
    group.sample_size(10);
    for name in FAMILIES {
        let f = family(name);
        let p = params(f);
        for n in CONVOLUTION_SIZES {
            group.throughput(Throughput::Elements(n as u64));
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| b.iter(|| oracle_coeffs(f, &p, black_box(n - 1)).unwrap()));
        }
    }
    group.finish();
}

criterion_group!(benches, recurrence, convolution);
criterion_main!(benches);
