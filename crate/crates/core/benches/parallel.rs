//! One-thread pool (sequential path) against the default pool on the
//! data-parallel kernels. Build with `--no-default-features` to time the
//! crate without rayon at all.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rainbow_sat::codes::{compatibility_graph, cyclic_family, exact_max_family, concat_product, verify_family};
use rainbow_sat::construct::{build_bipartite, maximal_extension};
use rainbow_sat::graph::is_rainbow_saturated;
use rainbow_sat::oracle::exact_rsat;
use rainbow_sat::{par, SearchConfig};

const POOLS: [(&str, usize); 2] = [("one-thread", 1), ("default", 0)];

fn kernels(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    let cyc = cyclic_family(3).unwrap();
    let code = concat_product(&concat_product(&cyc, &cyc).unwrap(), &cyc).unwrap();
    let h = maximal_extension(&build_bipartite(&code).unwrap(), 3).unwrap();

    let mut group = c.benchmark_group("kernels");
    group.sample_size(10);
    for (name, threads) in POOLS {
        group.bench_function(BenchmarkId::new("compatibility_graph(3,2,7)", name), |b| {
            b.iter(|| par::with_threads(threads, || black_box(compatibility_graph(3, 2, 7, 20_000).unwrap())))
        });
        group.bench_function(BenchmarkId::new("exact_max_family(3,2,5)", name), |b| {
            b.iter(|| par::with_threads(threads, || black_box(exact_max_family(3, 2, 5, &cfg).unwrap())))
        });
        group.bench_function(BenchmarkId::new("verify_family(27 strings)", name), |b| {
            b.iter(|| par::with_threads(threads, || black_box(verify_family(&code, 2).unwrap())))
        });
        group.bench_function(BenchmarkId::new("is_rainbow_saturated(n=36)", name), |b| {
            b.iter(|| par::with_threads(threads, || black_box(is_rainbow_saturated(&h, 3).unwrap())))
        });
        group.bench_function(BenchmarkId::new("exact_rsat(4,3,3)", name), |b| {
            b.iter(|| par::with_threads(threads, || black_box(exact_rsat(4, 3, 3, 100_000_000, false).unwrap())))
        });
    }
    group.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
