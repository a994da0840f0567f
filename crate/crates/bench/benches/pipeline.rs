use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use repdim_bench::{algebra, tilting_summands, TILTED_B, TOWER_B, WILD_A};
use repdim_core::constructions::{t_plus, trivial_extension};
use repdim_core::homological::global_dimension;
use repdim_core::module::hom_space;
use repdim_core::tilting::{end_presentation_of, tilt_hom};
use repdim_core::Representation;

fn construction(c: &mut Criterion) {
    c.bench_function("parse tower algebra", |b| b.iter(|| algebra(black_box(TOWER_B))));
    let tb = algebra(TILTED_B);
    c.bench_function("one-point extension by I(1)", |b| {
        b.iter(|| t_plus(black_box(&tb), 0).unwrap())
    });
    let tower = algebra(TOWER_B);
    c.bench_function("trivial extension", |b| {
        b.iter(|| trivial_extension(black_box(&tower)).unwrap())
    });
}

fn homological(c: &mut Criterion) {
    let tower = algebra(TOWER_B);
    c.bench_function("gldim tower algebra", |b| {
        b.iter(|| global_dimension(black_box(&tower), 12))
    });
    let a = algebra(WILD_A);
    let ts = tilting_summands(&a);
    c.bench_function("Hom(T2, T3) over the wild quiver", |b| {
        b.iter(|| hom_space(&a, black_box(&ts[1]), black_box(&ts[2])))
    });
}

fn tilting(c: &mut Criterion) {
    let a = algebra(WILD_A);
    let ts = tilting_summands(&a);
    let mut g = c.benchmark_group("tilting");
    g.sample_size(10);
    g.bench_function("End(T) presentation", |b| {
        b.iter(|| end_presentation_of(&a, black_box(ts.clone()), None, "B").unwrap())
    });
    let end = end_presentation_of(&a, ts, None, "B").unwrap();
    let i = Representation::injective(&a, 1);
    g.bench_function("Hom(T, I(2))", |b| {
        b.iter(|| tilt_hom(&a, &end, black_box(&i)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, construction, homological, tilting);
criterion_main!(benches);
