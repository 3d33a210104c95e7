use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use halin_star::exact::{star_chromatic_index, SearchConfig};
use halin_star::gen::{generate, Family, GenSpec};
use halin_star::{build_halin, color_cubic, color_halin, find_violation, HalinGraph};

fn instance(family: Family, n: usize, delta: usize, seed: u64) -> HalinGraph {
    build_halin(generate(&GenSpec::new(family, n, delta, seed)).unwrap()).unwrap()
}

fn cubic(c: &mut Criterion) {
    let mut group = c.benchmark_group("color_cubic");
    for n in [8, 32, 128] {
        let g = instance(Family::CubicRandom, n, 3, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| color_cubic(g).unwrap()));
    }
    group.finish()
}

fn general(c: &mut Criterion) {
    let mut group = c.benchmark_group("color_halin");
    for delta in [4, 6, 8] {
        let g = instance(Family::BoundedDeltaRandom, 40, delta, 2);
        group.bench_with_input(BenchmarkId::from_parameter(delta), &g, |b, g| b.iter(|| color_halin(g).unwrap()));
    }
    group.finish()
}

fn verify(c: &mut Criterion) {
    let g = instance(Family::BoundedDeltaRandom, 40, 6, 3);
    let coloring = color_halin(&g).unwrap().coloring;
    c.bench_function("find_violation", |b| b.iter(|| find_violation(g.graph(), &coloring).unwrap()));
}

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(10);
    for (name, g) in [("k4", instance(Family::Wheel, 3, 0, 0)), ("ell3", instance(Family::EllThreeCubic, 0, 0, 0))] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| star_chromatic_index(g.graph(), &SearchConfig::default()).unwrap())
        });
    }
    group.finish()
}

criterion_group!(benches, cubic, general, verify, exact);
criterion_main!(benches);
