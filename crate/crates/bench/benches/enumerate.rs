use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cyclori::hole::find_log_hole;
use cyclori::{prepare, solutions, Algorithm, HoleStrategy, Options};
use cyclori_bench::{complete, cubic, tree_plus_edge};

fn drain(c: &mut Criterion) {
    let mut group = c.benchmark_group("first_10k_solutions");
    for n in [6, 7, 8] {
        let g = complete(n);
        for algorithm in [Algorithm::Fast, Algorithm::Absorbed] {
            group.bench_with_input(
                BenchmarkId::new(algorithm.to_string(), format!("K{n}")),
                &g,
                |b, g| {
                    b.iter(|| {
                        let opts = Options {
                            algorithm,
                            ..Default::default()
                        };
                        solutions(black_box(g), &opts).unwrap().take(10_000).count()
                    })
                },
            );
        }
    }
    group.finish();
}

fn naive_gap(c: &mut Criterion) {
    let mut group = c.benchmark_group("tree_plus_edge_all_solutions");
    for tail in [8, 12] {
        let g = tree_plus_edge(tail);
        for algorithm in [Algorithm::Fast, Algorithm::Naive] {
            group.bench_with_input(BenchmarkId::new(algorithm.to_string(), tail), &g, |b, g| {
                b.iter(|| {
                    let opts = Options {
                        algorithm,
                        ..Default::default()
                    };
                    solutions(black_box(g), &opts).unwrap().count()
                })
            });
        }
    }
    group.finish();
}

fn hole_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("hole_search_cubic");
    for n in [256, 1024] {
        let p = prepare(&cubic(n, 1));
        for s in [
            HoleStrategy::Exact,
            HoleStrategy::Fast,
            HoleStrategy::Amortized,
        ] {
            group.bench_with_input(BenchmarkId::new(s.to_string(), n), &p.multigraph, |b, m| {
                b.iter(|| find_log_hole(black_box(m), s).unwrap())
            });
        }
    }
    group.finish();
}

fn first_solution(c: &mut Criterion) {
    let mut group = c.benchmark_group("first_solution_cubic_4096");
    group.sample_size(10);
    let g = cubic(4096, 1);
    for (name, algorithm, strategy) in [
        ("absorbed", Algorithm::Absorbed, HoleStrategy::Fast),
        ("fast_exact", Algorithm::Fast, HoleStrategy::Exact),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| {
                let opts = Options {
                    algorithm,
                    hole_strategy: strategy,
                };
                solutions(black_box(&g), &opts).unwrap().next()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, drain, naive_gap, hole_search, first_solution);
criterion_main!(benches);
