use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};
use ndtree::bench::{run_stream, RunOptions};
use ndtree::datasets::{generate, generate_with, GeneratorSpec};
use ndtree::nds::{brute_force_sort_with, nondominated_subset_with};
use ndtree::{BackendKind, ComparisonCounter, ParetoArchive};

/// One full stream through each backend, per dimension.
fn backends(c: &mut Criterion) {
    let mut group = c.benchmark_group("update_stream");
    group.sample_size(10);
    for p in [2, 4, 6] {
        let s = generate(&GeneratorSpec::convex(5000, p, 0.1, 1)).unwrap();
        for b in BackendKind::ALL.into_iter().filter(|b| b.supports(p)) {
            group.bench_with_input(BenchmarkId::new(b.id(), p), &s.points, |bench, points| {
                bench.iter_batched(
                    || points.clone(),
                    |points| {
                        let mut a = b.build();
                        let mut counter = ComparisonCounter::new();
                        for y in points {
                            a.update(y, &mut counter).unwrap();
                        }
                        black_box(a.len())
                    },
                    BatchSize::LargeInput,
                )
            });
        }
    }
    group.finish();
}

/// The data-parallel paths against their sequential fallbacks. Without the
/// `parallel` feature both variants run sequentially.
fn sequential_vs_parallel(c: &mut Criterion) {
    let mut group = c.benchmark_group("parallel");
    group.sample_size(10);

    let spec = GeneratorSpec::convex(50_000, 6, 0.1, 3);
    let clustered = GeneratorSpec::clustered(20, 500, 3, 0.1, 3);
    let population = generate(&GeneratorSpec::convex(3000, 5, 0.1, 4))
        .unwrap()
        .points;
    let stream = generate(&GeneratorSpec::convex(5000, 4, 0.1, 5)).unwrap();

    for (label, parallel) in [("sequential", false), ("parallel", true)] {
        group.bench_function(BenchmarkId::new("generate_convex", label), |b| {
            b.iter(|| black_box(generate_with(&spec, parallel).unwrap().len()))
        });
        group.bench_function(BenchmarkId::new("generate_clustered", label), |b| {
            b.iter(|| black_box(generate_with(&clustered, parallel).unwrap().len()))
        });
        group.bench_function(BenchmarkId::new("brute_force_sort", label), |b| {
            b.iter(|| {
                black_box(
                    brute_force_sort_with(&population, parallel)
                        .unwrap()
                        .num_fronts(),
                )
            })
        });
        group.bench_function(BenchmarkId::new("oracle_subset", label), |b| {
            b.iter(|| black_box(nondominated_subset_with(&population, parallel).len()))
        });
        let opts = RunOptions {
            repetitions: 8,
            shuffle: true,
            parallel,
            ..RunOptions::default()
        };
        group.bench_function(BenchmarkId::new("repetitions", label), |b| {
            b.iter(|| {
                black_box(
                    run_stream(BackendKind::MFront2, &stream, &opts)
                        .unwrap()
                        .len(),
                )
            })
        });
    }
    group.finish();
}

criterion_group!(benches, backends, sequential_vs_parallel);
criterion_main!(benches);
