use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use domgame::corpus::{enumerate_trees, random_connected, tree_canonical_form};

fn tree_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_trees");
    for n in [10, 12, 14] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_trees(n).unwrap().count())
        });
    }
    group.finish();
}

fn canonical_forms(c: &mut Criterion) {
    let trees: Vec<_> = enumerate_trees(12).unwrap().collect();
    c.bench_function("canonical_form_12", |b| {
        b.iter(|| trees.iter().filter_map(tree_canonical_form).count())
    });
}

fn random_graphs(c: &mut Criterion) {
    c.bench_function("random_connected_9", |b| {
        let mut seed = 0;
        b.iter(|| {
            seed += 1;
            random_connected(9, seed).unwrap()
        })
    });
}

criterion_group!(benches, tree_enumeration, canonical_forms, random_graphs);
criterion_main!(benches);
