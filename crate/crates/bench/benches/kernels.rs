use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use turanmatch::graph::random_graph;
use turanmatch::invariants::{
    clique_number, gallai_edmonds, matching_number, tutte_berge_max_deficiency,
};
use turanmatch::oracle::enumerate_oracle;
use turanmatch::symmetrization::{local_search_with, SearchConfig};
use turanmatch::{ex_edges, make_gks};

fn formulas(c: &mut Criterion) {
    c.bench_function("ex_edges sweep n<=100", |b| {
        b.iter(|| {
            let mut total = 0u64;
            for n in 1..=100 {
                for k in 1..=10 {
                    total += ex_edges(n, k, n / 3).unwrap().value;
                }
            }
            black_box(total)
        })
    });
}

fn invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariants");
    for n in [16, 64, 128] {
        let g = random_graph(n, 0.3, 7);
        group.bench_with_input(BenchmarkId::new("matching", n), &g, |b, g| {
            b.iter(|| matching_number(black_box(g)).0)
        });
        group.bench_with_input(BenchmarkId::new("clique", n), &g, |b, g| {
            b.iter(|| clique_number(black_box(g)).unwrap().0)
        });
        group.bench_with_input(BenchmarkId::new("gallai_edmonds", n), &g, |b, g| {
            b.iter(|| gallai_edmonds(black_box(g)).unwrap())
        });
    }
    let g = random_graph(14, 0.2, 3);
    group.bench_function("tutte_berge n=14", |b| {
        b.iter(|| tutte_berge_max_deficiency(black_box(&g)).unwrap())
    });
    let (gks, _) = make_gks(40, 4, 10).unwrap();
    group.bench_function("clique gks(40,4,10)", |b| {
        b.iter(|| clique_number(black_box(&gks)).unwrap().0)
    });
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("enumerate n=6", |b| {
        b.iter(|| enumerate_oracle(black_box(6), 1).unwrap())
    });
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    let config = SearchConfig {
        stop_at_bound: false,
        restarts: 4,
        ..SearchConfig::default()
    };
    group.bench_function("local_search (14,4,6)", |b| {
        b.iter(|| {
            local_search_with(14, 4, 6, black_box(1), &config)
                .unwrap()
                .best
                .edge_count()
        })
    });
    group.finish();
}

criterion_group!(benches, formulas, invariants, oracle, search);
criterion_main!(benches);
