use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use e0graph_bench::GROUPS;
use e0graph_core::infinite::{BallGraph, GeometricGroup};
use e0graph_core::{E0Graph, FiniteGroup, GroupSpec, InvolutionSet};

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for &label in GROUPS {
        group.bench_with_input(BenchmarkId::from_parameter(label), label, |b, label| {
            b.iter(|| FiniteGroup::from_label(label).unwrap().elements().len())
        });
    }
    group.finish();
}

fn involutions(c: &mut Criterion) {
    let mut group = c.benchmark_group("involutions");
    for &label in GROUPS {
        let g = FiniteGroup::from_label(label).unwrap();
        group.bench_function(label, |b| b.iter(|| InvolutionSet::enumerate(&g).len()));
    }
    group.finish();
}

fn build_graph(c: &mut Criterion) {
    let mut group = c.benchmark_group("graph");
    for &label in GROUPS {
        let g = FiniteGroup::from_label(label).unwrap();
        let invols = InvolutionSet::enumerate(&g);
        group.bench_function(label, |b| b.iter(|| E0Graph::from_involutions(&g, invols.clone()).edge_count()));
        let graph = E0Graph::build(&g);
        group.bench_function(format!("{label}/distribution"), |b| b.iter(|| graph.valency_distribution()));
    }
    group.finish();
}

fn ball(c: &mut Criterion) {
    let mut group = c.benchmark_group("ball");
    group.sample_size(10);
    for (label, radius) in [("U3", 6), ("U4", 5)] {
        let g = GeometricGroup::new(&GroupSpec::parse(label).unwrap());
        group.bench_function(format!("{label}/L{radius}"), |b| {
            b.iter(|| BallGraph::build(&g, radius).unwrap().vertex_count())
        });
    }
    group.finish();
}

criterion_group!(benches, enumerate, involutions, build_graph, ball);
criterion_main!(benches);
