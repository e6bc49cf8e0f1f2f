//! Benchmarks for the paths the check suites lean on: multiset algebra
//! on parameters, character decomposition over the catalog groups, the
//! exhaustive root-of-unity sweep, and coefficient expansion.

use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use cusp_core::charalg::{GeneratorBasis, NumericEmbedding};
use cusp_core::criterion::{decide_pair_on_group, tensor_verdict_bruteforce, GroupContext};
use cusp_core::galois::catalog;
use cusp_core::isobaric::{ext_cube_identity_sides, LocalParameter};
use cusp_core::lfactor::series_from_embeddings;
use cusp_core::numlemma::counterexample_search_roots;

fn bench_ext_cube_identity(c: &mut Criterion) {
    let b = GeneratorBasis::parse("basis a1, a2, b1, b2, b3;").unwrap();
    let a2 = LocalParameter::parse(&b, "[a1, a2]").unwrap();
    let a3 = LocalParameter::parse(&b, "[b1, b2, b3]").unwrap();
    c.bench_function("degree-22 identity, symbolic", |bench| {
        bench.iter(|| {
            let (lhs, rhs) = ext_cube_identity_sides(black_box(&a2), black_box(&a3)).unwrap();
            assert_eq!(lhs, rhs);
        })
    });
}

fn bench_group_decision(c: &mut Criterion) {
    let group = catalog::gl23().unwrap();
    let irr = group.irreducibles().unwrap();
    let ctx = GroupContext::new(&group).unwrap();
    let x2 = irr
        .iter()
        .find(|f| f.degree_int() == Some(2))
        .unwrap()
        .clone();
    let x3 = irr
        .iter()
        .find(|f| f.degree_int() == Some(3))
        .unwrap()
        .clone();
    c.bench_function("decision tree on a catalog pair", |bench| {
        bench.iter(|| decide_pair_on_group(black_box(&ctx), &x2, &x3).unwrap())
    });
    c.bench_function("brute-force tensor decomposition", |bench| {
        bench.iter(|| tensor_verdict_bruteforce(black_box(&x2), black_box(&x3)).unwrap())
    });
}

fn bench_root_sweep(c: &mut Criterion) {
    c.bench_function("exhaustive sweep, order 8", |bench| {
        bench.iter(|| counterexample_search_roots(black_box(8)).unwrap())
    });
}

fn bench_dirichlet(c: &mut Criterion) {
    let b = GeneratorBasis::parse("basis a1, a2, b1, b2, b3;").unwrap();
    let a2 = LocalParameter::parse(&b, "[a1, a2]").unwrap();
    let a3 = LocalParameter::parse(&b, "[b1, b2, b3]").unwrap();
    let prod = a2.boxtimes(&a3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let embs: Vec<(u64, NumericEmbedding)> = [2u64, 3, 5, 7, 11, 13]
        .iter()
        .map(|&p| (p, NumericEmbedding::random(&b, &mut rng)))
        .collect();
    let series = series_from_embeddings(&prod, &embs).unwrap();
    c.bench_function("dirichlet coefficients to 10000", |bench| {
        bench.iter(|| series.dirichlet_coefficients(black_box(10_000)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_ext_cube_identity,
    bench_group_decision,
    bench_root_sweep,
    bench_dirichlet
);
criterion_main!(benches);
