use std::hint::black_box;

use chowcalc_bench::{abc_points, DEGREES};
use chowcalc_core::groebner::buchberger;
use chowcalc_core::scalars::{interpolate, UniPoly};
use chowcalc_core::theorems::{abc_table, hodge_product, nodal_relations, r_nodal};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn hodge(c: &mut Criterion) {
    let mut group = c.benchmark_group("hodge_product");
    for d in DEGREES {
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| hodge_product(black_box(d), 3))
        });
    }
    group.finish();
}

fn groebner(c: &mut Criterion) {
    let mut group = c.benchmark_group("buchberger_nodal");
    for d in DEGREES {
        let ideal = nodal_relations(d);
        group.bench_with_input(BenchmarkId::from_parameter(d), &ideal, |b, ideal| {
            b.iter(|| buchberger(black_box(ideal)))
        });
    }
    group.finish();
}

fn generic_pushforward(c: &mut Criterion) {
    let d = UniPoly::d();
    c.bench_function("r_nodal_generic_h2", |b| b.iter(|| r_nodal(2, black_box(&d))));
}

fn table(c: &mut Criterion) {
    c.bench_function("abc_table_4_20", |b| b.iter(|| abc_table(black_box(4), 20)));
}

fn newton(c: &mut Criterion) {
    let points = abc_points(4, 20);
    c.bench_function("interpolate_17_points", |b| {
        b.iter(|| interpolate(black_box(&points), 9))
    });
}

criterion_group!(benches, hodge, groebner, generic_pushforward, table, newton);
criterion_main!(benches);
