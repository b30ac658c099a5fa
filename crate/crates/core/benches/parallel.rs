//! Benchmarks comparing the rayon-parallel batch scans against their
//! sequential reference paths.
//!
//! Build with default features to exercise the parallel code; build with
//! `--no-default-features` to measure the pure sequential crate (both
//! benchmark entries then coincide).

use criterion::{criterion_group, criterion_main, Criterion};

use starres::complex::{acyclic_witness, acyclic_witness_seq};
use starres::experiments::{run_scenario, Scenario};
use starres::field::PrimeField;
use starres::oracle::{upper_koszul_betti, upper_koszul_betti_seq};
use starres::parse::parse_ideals;
use starres::pipeline::{resolve_product, ModuleSpec};

fn fixtures() -> (
    starres::ChainComplex<PrimeField>,
    starres::MonomialIdeal,
    PrimeField,
) {
    let field = PrimeField::default_prime();
    let ideals = parse_ideals(&["x1^2, x2*x3", "x4*x5, x5^2*x6, x6^3"]).unwrap();
    let (star, _) = resolve_product(
        &field,
        &ideals[0],
        &ModuleSpec::Quotient(ideals[1].clone()),
        16,
    )
    .unwrap();
    let ij = ideals[0].product(&ideals[1]).unwrap();
    (star, ij, field)
}

fn bench_acyclicity(c: &mut Criterion) {
    let (star, _, _) = fixtures();
    let mut group = c.benchmark_group("acyclic_scan");
    group.bench_function("parallel", |b| {
        b.iter(|| acyclic_witness(&star).unwrap().is_none())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| acyclic_witness_seq(&star).unwrap().is_none())
    });
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let (_, ij, field) = fixtures();
    let mut group = c.benchmark_group("lattice_betti");
    group.bench_function("parallel", |b| b.iter(|| upper_koszul_betti(&field, &ij)));
    group.bench_function("sequential", |b| {
        b.iter(|| upper_koszul_betti_seq(&field, &ij))
    });
    group.finish();
}

fn bench_scenario(c: &mut Criterion) {
    let field = PrimeField::default_prime();
    let mut group = c.benchmark_group("scenario");
    group.sample_size(10);
    group.bench_function("disjoint_4_trials", |b| {
        b.iter(|| run_scenario(&field, Scenario::Disjoint, 4, 2024, 16))
    });
    group.finish();
}

criterion_group!(benches, bench_acyclicity, bench_oracle, bench_scenario);
criterion_main!(benches);
