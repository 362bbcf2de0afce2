use std::hint::black_box;

use cosymplectic::catalog::{entries, find, heisenberg, validated_samples, verify_all};
use cosymplectic::cosymplectic::{exists_cosymplectic, phi_map, CosymplecticStructure};
use cosymplectic::scalars::linalg::det_poly;
use criterion::{criterion_group, criterion_main, Criterion};

fn existence(c: &mut Criterion) {
    let h5 = heisenberg(2);
    c.bench_function("exists/heisenberg5", |b| b.iter(|| exists_cosymplectic(black_box(&h5)).unwrap()));
    let a51 = &validated_samples(find("A_{5,1}").unwrap()).unwrap()[0].algebra;
    c.bench_function("exists/A51", |b| b.iter(|| exists_cosymplectic(black_box(a51)).unwrap()));
}

fn symbolic_det(c: &mut Criterion) {
    // the widest family: Φ over eleven parameters
    let f = &find("A_{5,1}").unwrap().file;
    let phi = phi_map(&f.algebra, f.alpha.as_ref().unwrap(), f.omega.as_ref().unwrap()).unwrap();
    c.bench_function("det_poly/A51-phi", |b| b.iter(|| det_poly(black_box(&phi))));
}

fn lsa(c: &mut Criterion) {
    let s = entries()
        .iter()
        .flat_map(|e| validated_samples(e).unwrap())
        .find(|s| s.algebra.dim() == 5)
        .unwrap();
    let st = CosymplecticStructure::new(s.algebra, s.alpha, s.omega).unwrap();
    c.bench_function("lsa/dim5", |b| b.iter(|| black_box(&st).lsa().unwrap()));
}

fn catalog(c: &mut Criterion) {
    let mut g = c.benchmark_group("catalog");
    g.sample_size(10);
    g.bench_function("verify_all", |b| b.iter(verify_all));
    g.finish();
}

criterion_group!(benches, existence, symbolic_det, lsa, catalog);
criterion_main!(benches);
