use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use tridendriform::coproduct::{coproduct, reduced_coproduct};
use tridendriform::dual::dual_product;
use tridendriform::primitives::{primitive_basis, PrimKind};
use tridendriform::products::{check_tridend_axioms, star};
use tridendriform::{enumerate_trees, TreeVector};
use tridendriform_bench::{full_slice, right_comb};

fn bench_products(c: &mut Criterion) {
    let x = full_slice(3);
    let y = full_slice(3);
    c.bench_function("star full-slice deg3 x deg3", |b| {
        b.iter(|| star(black_box(&x), black_box(&y)))
    });
    let comb = TreeVector::basis(right_comb(6));
    c.bench_function("star comb6 x comb6", |b| {
        b.iter(|| star(black_box(&comb), black_box(&comb)))
    });
}

fn bench_coproducts(c: &mut Criterion) {
    let x = full_slice(5);
    c.bench_function("coproduct full-slice deg5", |b| {
        b.iter(|| coproduct(black_box(&x)))
    });
    c.bench_function("reduced coproduct full-slice deg5", |b| {
        b.iter(|| reduced_coproduct(black_box(&x)).unwrap())
    });
}

fn bench_dual(c: &mut Criterion) {
    let trees = enumerate_trees(2);
    let x = TreeVector::basis(trees[0].clone());
    let y = TreeVector::basis(trees[1].clone());
    c.bench_function("dual product deg2 x deg2", |b| {
        b.iter(|| dual_product(black_box(&x), black_box(&y)))
    });
}

fn bench_kernels(c: &mut Criterion) {
    c.bench_function("codendriform kernel deg4", |b| {
        b.iter(|| primitive_basis(PrimKind::Codend, black_box(4)))
    });
    c.bench_function("coassociative kernel deg5", |b| {
        b.iter(|| primitive_basis(PrimKind::Coass, black_box(5)))
    });
}

fn bench_verification(c: &mut Criterion) {
    c.bench_function("tridendriform axioms to degree 5", |b| {
        b.iter(|| {
            let report = check_tridend_axioms(black_box(5));
            assert!(report.is_ok());
            report.checked
        })
    });
}

criterion_group!(
    benches,
    bench_products,
    bench_coproducts,
    bench_dual,
    bench_kernels,
    bench_verification
);
criterion_main!(benches);
