use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use homtop::graph::{complete, cycle};
use homtop::homcomplex::{cellular_chain_complex, enumerate_multihoms};
use homtop::homology::{boundary_matrices, gf2, homology_summary};
use homtop::SimplicialComplex;
use homtop_bench::{small_model_cells, small_model_order_complex};

fn enumeration(c: &mut Criterion) {
    let g = cycle(5);
    for n in [4, 5] {
        let h = complete(n);
        c.bench_function(&format!("enumerate Hom(C5,K{n})"), |b| b.iter(|| enumerate_multihoms(black_box(&g), &h)));
    }
    c.bench_function("restricted cells n=3", |b| b.iter(|| small_model_cells(black_box(3))));
}

fn order_complexes(c: &mut Criterion) {
    c.bench_function("order complex of small model n=2", |b| b.iter(|| small_model_order_complex(black_box(2))));
}

fn homology(c: &mut Criterion) {
    let k = small_model_order_complex(2);
    c.bench_function("integral homology, small model n=2", |b| b.iter(|| homology_summary(black_box(&k)).unwrap()));
    c.bench_function("mod-2 betti, small model n=2", |b| b.iter(|| gf2::betti_mod2(black_box(&k))));
    let chain = boundary_matrices(&k);
    c.bench_function("boundary squared check, small model n=2", |b| {
        b.iter(|| black_box(&chain).check_boundary_squared().unwrap())
    });
    let cells = small_model_cells(3);
    c.bench_function("cellular homology, small model n=3", |b| {
        b.iter(|| cellular_chain_complex(black_box(&cells)).unwrap().homology().unwrap())
    });
    let s3 = SimplicialComplex::simplex_boundary(&[0, 1, 2, 3, 4]).barycentric().unwrap().barycentric().unwrap();
    c.bench_function("integral homology, second subdivision of the 3-sphere", |b| {
        b.iter(|| homology_summary(black_box(&s3)).unwrap())
    });
}

criterion_group! {
    name = kernels;
    config = Criterion::default().sample_size(10);
    targets = enumeration, order_complexes, homology
}
criterion_main!(kernels);
