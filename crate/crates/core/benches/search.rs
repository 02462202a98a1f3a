//! Sequential against rayon execution on the three heaviest sweeps.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pushlab::corpus::{run_corpus, CorpusKind};
use pushlab::io::builtin;
use pushlab::reducibility::{exhaustive_sweep, search_six_vertex_targets};
use pushlab::tournament::paley;
use pushlab::Exec;

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn cube_sweep(c: &mut Criterion) {
    let pal = paley(7).unwrap();
    let cube = builtin("t4").unwrap();
    let mut group = c.benchmark_group("t4-orientations");
    group.sample_size(10);
    for (name, exec) in POLICIES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| exhaustive_sweep(black_box(&cube), &pal, exec).unwrap())
        });
    }
    group.finish();
}

fn six_vertex_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search-six");
    group.sample_size(10);
    for (name, exec) in POLICIES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| search_six_vertex_targets(true, exec).unwrap())
        });
    }
    group.finish();
}

fn sandwich_corpus(c: &mut Criterion) {
    let mut group = c.benchmark_group("sandwich-100");
    group.sample_size(10);
    for (name, exec) in POLICIES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| run_corpus(CorpusKind::Sandwich, 100, black_box(1), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, cube_sweep, six_vertex_search, sandwich_corpus);
criterion_main!(benches);
