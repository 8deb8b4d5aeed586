use criterion::{black_box, criterion_group, criterion_main, Criterion};

use ramsey_core::{
    clique, issai_search, search, CliqueTargets, CyclicColoring, DifferenceColoring, DifferenceSet,
    SearchOptions,
};

fn targets(sizes: &[usize]) -> CliqueTargets {
    CliqueTargets::new(sizes.to_vec()).unwrap()
}

fn witness_59() -> DifferenceColoring {
    CyclicColoring::new(
        59,
        &[
            vec![5, 12, 13, 14, 16, 20, 22],
            vec![10, 15, 19, 24, 26, 27],
            vec![1, 2, 3, 4, 6, 7, 8, 9, 11, 17, 18, 21, 23, 25, 28, 29],
        ],
    )
    .unwrap()
    .expand()
    .unwrap()
}

fn bench_clique_kernels(c: &mut Criterion) {
    // a dense K_6-free class on 58 differences
    let witness = witness_59();
    let class3 = witness.class(3);
    let grown = DifferenceSet::from_members(60, class3.iter()).unwrap();

    c.bench_function("has_clique k6 dense class", |b| {
        b.iter(|| clique::has_clique(black_box(&class3), black_box(6)))
    });
    c.bench_function("creates_clique_with k6 dense class", |b| {
        b.iter(|| clique::creates_clique_with(black_box(&grown), 60, black_box(6)).unwrap())
    });
}

fn bench_searches(c: &mut Criterion) {
    let opts = SearchOptions::default();
    c.bench_function("search D(3,5)", |b| {
        b.iter(|| search(black_box(&targets(&[3, 5])), &opts).unwrap().value)
    });
    c.bench_function("search D(4,5)", |b| {
        b.iter(|| search(black_box(&targets(&[4, 5])), &opts).unwrap().value)
    });
    c.bench_function("issai S(4,5)", |b| {
        b.iter(|| {
            issai_search(black_box(&targets(&[4, 5])), &opts)
                .unwrap()
                .value
        })
    });
}

fn bench_oracle_verification(c: &mut Criterion) {
    let witness = witness_59();
    c.bench_function("verify 59-vertex witness (both routes)", |b| {
        b.iter(|| {
            let graph = witness.materialize();
            let mut ok = true;
            for (color, k) in [(1usize, 3usize), (2, 3), (3, 6)] {
                ok &= !clique::has_clique(&witness.class(color), k);
                ok &= !graph.has_mono_clique(k, color);
            }
            ok
        })
    });
}

criterion_group!(
    benches,
    bench_clique_kernels,
    bench_searches,
    bench_oracle_verification
);
criterion_main!(benches);
