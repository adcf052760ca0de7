use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fibcube::factorization::{factorize_with, theorem_grid_with};
use fibcube::graph::{all_pairs_distances_with, cartesian_product_all};
use fibcube::relations::sigma_classes_with;
use fibcube::{build_cube, CubeParams, Exec, Graph};

const STRATEGIES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn distances(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_pairs_distances");
    for n in [10, 14] {
        let g = build_cube(CubeParams::o(1, 1, n).unwrap());
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, g.vertex_count()), &g, |b, g| {
                b.iter(|| all_pairs_distances_with(g, exec))
            });
        }
    }
    group.finish();
}

fn sigma(c: &mut Criterion) {
    let mut group = c.benchmark_group("sigma_classes");
    group.sample_size(10);
    let inputs = [
        build_cube(CubeParams::o(2, 2, 10).unwrap()),
        cartesian_product_all(&[Graph::cycle(5), Graph::path(6), Graph::star(4)]),
    ];
    for g in &inputs {
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, g.vertex_count()), g, |b, g| {
                b.iter(|| sigma_classes_with(g, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn factor(c: &mut Criterion) {
    let mut group = c.benchmark_group("factorize");
    group.sample_size(10);
    let g = build_cube(CubeParams::o(1, 8, 8).unwrap());
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |b| b.iter(|| factorize_with(&g, exec).unwrap()));
    }
    group.finish();
}

fn grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorem_grid");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |b| b.iter(|| theorem_grid_with(3, 3, 8, 300, exec)));
    }
    group.finish();
}

criterion_group!(benches, distances, sigma, factor, grid);
criterion_main!(benches);
