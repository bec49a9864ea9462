//! End-to-end timings of the main pipelines on catalogue-sized inputs.

use criterion::{criterion_group, criterion_main, Criterion};

use toricsplit::budget::Budget;
use toricsplit::graphs::{self, BipartiteGraph};
use toricsplit::toric::Configuration;
use toricsplit::{families, splitting, supports, toric};

fn big_budget() -> Budget {
    Budget::new(u64::MAX)
}

fn graver_symmetric_curve(c: &mut Criterion) {
    let config = families::symmetric_curve(5, 6).unwrap().config;
    c.bench_function("graver symmetric-curve 5 6", |b| {
        b.iter(|| toric::graver_basis(&config, &big_budget()).unwrap())
    });
}

fn markov_nonsimplicial(c: &mut Criterion) {
    let config = families::catalogued_example("ex4_5").unwrap().config;
    c.bench_function("markov ex4_5", |b| {
        b.iter(|| toric::minimal_markov(&config, &big_budget()).unwrap())
    });
}

fn circuits_cyclic(c: &mut Criterion) {
    let config = families::cyclic_configuration(3, None).unwrap().config;
    c.bench_function("circuits cyclic d=3", |b| {
        b.iter(|| supports::circuits(config.matrix(), &big_budget()).unwrap())
    });
}

fn delta_cyclic(c: &mut Criterion) {
    let config = families::cyclic_configuration(3, None).unwrap().config;
    c.bench_function("gamma and delta cyclic d=3", |b| {
        b.iter(|| {
            let budget = big_budget();
            let circs = supports::circuits(config.matrix(), &budget).unwrap();
            let verts = supports::cmin(&circs);
            let graph = supports::gamma_graph(config.matrix(), &verts, &budget).unwrap();
            supports::delta01(&graph)
        })
    });
}

fn cover_k33(c: &mut Criterion) {
    let graph = BipartiteGraph::complete(3, 3).unwrap();
    let generators = graphs::cycle_generators(&graph);
    let config = graphs::incidence_configuration(&graph);
    c.bench_function("find_cover K(3,3) r=3", |b| {
        b.iter(|| splitting::find_cover(&config, &generators, 3, &big_budget()).unwrap())
    });
}

fn split_lawrence(c: &mut Criterion) {
    let config = families::lawrence_of_symmetric_curve(2, 3).unwrap().config;
    c.bench_function("split_numbers lawrence 2 3", |b| {
        b.iter(|| splitting::split_numbers(&config, &big_budget(), true).unwrap())
    });
}

fn split_twisted_cubic(c: &mut Criterion) {
    let config = Configuration::from_i64(&[vec![3, 2, 1, 0], vec![0, 1, 2, 3]]).unwrap();
    c.bench_function("split_numbers twisted cubic", |b| {
        b.iter(|| splitting::split_numbers(&config, &big_budget(), false).unwrap())
    });
}

criterion_group!(
    benches,
    graver_symmetric_curve,
    markov_nonsimplicial,
    circuits_cyclic,
    delta_cyclic,
    cover_k33,
    split_lawrence,
    split_twisted_cubic
);
criterion_main!(benches);
