use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use orbigroupoid::fixtures::{fixture, FIXTURE_NAMES};
use orbigroupoid::{are_morita_equivalent, check_inertia_embedding, embedding_to_immersion, inertia, is_orbifold_embedding};
use orbigroupoid_bench::{random_embeddings, random_equivalences};

fn embedding_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("embedding-check");
    for name in FIXTURE_NAMES {
        let f = fixture(name).unwrap();
        group.bench_function(name, |b| b.iter(|| is_orbifold_embedding(black_box(&f.morphism)).unwrap()));
    }
    let instances = random_embeddings(1, 16);
    group.bench_function("random-16", |b| {
        b.iter(|| instances.iter().map(|e| is_orbifold_embedding(&e.morphism).unwrap().verdict).filter(|&v| v).count())
    });
    group.finish();
}

fn immersion(c: &mut Criterion) {
    let instances = random_embeddings(2, 16);
    c.bench_function("embedding-to-immersion/random-16", |b| {
        b.iter(|| instances.iter().map(|e| embedding_to_immersion(&e.morphism, &e.target).unwrap().n.point_count()).sum::<usize>())
    });
}

fn inertia_kernels(c: &mut Criterion) {
    let f = fixture("binary-dihedral").unwrap();
    c.bench_function("inertia/binary-dihedral-codomain", |b| b.iter(|| inertia(black_box(&f.morphism.codomain))));
    c.bench_function("inertia-embedding/binary-dihedral", |b| b.iter(|| check_inertia_embedding(black_box(&f.morphism)).unwrap()));
}

fn morita(c: &mut Criterion) {
    let pairs = random_equivalences(3, 16);
    c.bench_function("morita/random-16", |b| {
        b.iter(|| pairs.iter().filter(|(g, e)| are_morita_equivalent(&e.domain, g).0).count())
    });
}

criterion_group!(benches, embedding_check, immersion, inertia_kernels, morita);
criterion_main!(benches);
