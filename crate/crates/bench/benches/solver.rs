use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use domgame::graph::family::{leafy_clique, path};
use domgame::solver::{game_length_parallel, SolverConfig};
use domgame::{game_length, Player, Variant, VertexSet};
use domgame_bench::caterpillar;

fn paths(c: &mut Criterion) {
    let mut group = c.benchmark_group("path");
    for n in [10, 14, 18] {
        let g = path(n).unwrap();
        for v in [Variant::Z, Variant::L, Variant::LL] {
            group.bench_with_input(BenchmarkId::new(v.name(), n), &g, |b, g| {
                b.iter(|| game_length(black_box(g), v, Player::Dominator, VertexSet::EMPTY).unwrap())
            });
        }
    }
    group.finish();
}

fn trees(c: &mut Criterion) {
    let cat = caterpillar();
    let mut group = c.benchmark_group("caterpillar");
    for v in Variant::ALL {
        group.bench_function(v.name(), |b| {
            b.iter(|| game_length(black_box(&cat), v, Player::Dominator, VertexSet::EMPTY).unwrap())
        });
    }
    group.finish();
}

fn shared_table(c: &mut Criterion) {
    let f3 = leafy_clique(3).unwrap();
    let mut group = c.benchmark_group("leafy_clique_3_l");
    group.bench_function("sequential", |b| {
        b.iter(|| game_length(black_box(&f3), Variant::L, Player::Dominator, VertexSet::EMPTY).unwrap())
    });
    group.bench_function("parallel", |b| {
        b.iter(|| {
            game_length_parallel(black_box(&f3), Variant::L, Player::Dominator, VertexSet::EMPTY, SolverConfig::default())
                .unwrap()
        })
    });
    group.finish();
}

criterion_group!(benches, paths, trees, shared_table);
criterion_main!(benches);
