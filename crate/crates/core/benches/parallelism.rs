//! Parallel-versus-sequential benchmarks for the data-parallel stages: the
//! grid search and the catalog-wide transport-equivariance sweep.
//!
//! Build with the default `parallel` feature to compare both execution
//! modes; without it both arms run the sequential fallback.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use weakhopf::axioms::{verify, Level};
use weakhopf::catalog::{self, Kind};
use weakhopf::exactmath::Scalar;
use weakhopf::search::{enumerate, ExecMode, SearchSpec};
use weakhopf::transport::{transport, BasisChange};

fn grid(vals: &[i64]) -> Vec<Scalar> {
    vals.iter().map(|&v| Scalar::from_integer(v)).collect()
}

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_dim2");
    group.sample_size(10);
    for (name, mode) in [
        ("sequential", ExecMode::Sequential),
        ("parallel", ExecMode::Parallel),
    ] {
        group.bench_with_input(BenchmarkId::new("m2_grid4", name), &mode, |b, &mode| {
            b.iter(|| {
                let mut spec =
                    SearchSpec::new(catalog::base_algebra(2, 2).unwrap(), grid(&[-1, 0, 1, 2]));
                spec.mode = mode;
                let out = enumerate(&spec).unwrap();
                assert_eq!(out.hits.len(), 4);
            })
        });
    }
    group.finish();
}

fn bench_catalog_sweep(c: &mut Criterion) {
    // Verify all dimension-3 entries transported along a fixed basis change;
    // the per-entry work is independent, so rayon splits it when enabled.
    let entries: Vec<_> = catalog::entries(3, Kind::WeakBialgebra)
        .into_iter()
        .map(|e| e.structure)
        .collect();
    let g = BasisChange::from_int_rows(&[&[1, 2, 0], &[0, 1, 1], &[1, 0, 2]]).unwrap();
    let run_sequential = |entries: &[weakhopf::structure::WeakStructure]| {
        entries
            .iter()
            .map(|h| verify(&transport(h, &g).unwrap(), Level::WeakBialgebra).pass)
            .filter(|&p| p)
            .count()
    };
    #[cfg(feature = "parallel")]
    let run_parallel = |entries: &[weakhopf::structure::WeakStructure]| {
        use rayon::prelude::*;
        entries
            .par_iter()
            .map(|h| verify(&transport(h, &g).unwrap(), Level::WeakBialgebra).pass)
            .filter(|&p| p)
            .count()
    };
    let mut group = c.benchmark_group("transport_verify_dim3");
    group.sample_size(20);
    group.bench_function("sequential", |b| {
        b.iter(|| assert_eq!(run_sequential(&entries), 20));
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| assert_eq!(run_parallel(&entries), 20));
    });
    group.finish();
}

criterion_group!(benches, bench_search, bench_catalog_sweep);
criterion_main!(benches);
