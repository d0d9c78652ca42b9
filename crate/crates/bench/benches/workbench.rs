//! End-to-end benchmarks over the main analysis paths: Pauli algebra,
//! definition diagnosis, state encoding, distance searches, and dephasing.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use stabkit::catalog::{genus2_unit, genus2_vertical_chain, genus5_stacked_definition};
use stabkit::code::validate_definition;
use stabkit::dephasing::{
    bloch_coordinates, compare_closed_form_with, default_comparison_grid, dephase, DephasingModel,
    DephasingSpec,
};
use stabkit::distance::{kl_distance, normalizer_search, symplectic_distance};
use stabkit::pauli::PauliOperator;
use stabkit::state::encode_zero;

fn pauli_algebra(c: &mut Criterion) {
    let n = 24;
    let a = PauliOperator::parse(
        "X1Y2Z3X5Y7Z9X11Y13Z15X17Y19Z21X23",
        n,
    )
    .unwrap();
    let b = PauliOperator::parse(
        "Z2X4Y6Z8X10Y12Z14X16Y18Z20X22Y24",
        n,
    )
    .unwrap();
    c.bench_function("pauli_multiply_n24", |bench| {
        bench.iter(|| black_box(&a).multiply(black_box(&b)).unwrap())
    });
    c.bench_function("pauli_commutes_n24", |bench| {
        bench.iter(|| black_box(&a).commutes_with(black_box(&b)).unwrap())
    });
}

fn definition_diagnosis(c: &mut Criterion) {
    let stacked = genus5_stacked_definition();
    c.bench_function("validate_definition_stacked_n24", |bench| {
        bench.iter(|| validate_definition(black_box(&stacked)))
    });
}

fn state_encoding(c: &mut Criterion) {
    let chain2 = genus2_vertical_chain(2).unwrap();
    c.bench_function("encode_zero_chain2_n10", |bench| {
        bench.iter(|| encode_zero(black_box(&chain2)).unwrap())
    });
}

fn distance_searches(c: &mut Criterion) {
    let unit = genus2_unit();
    let chain2 = genus2_vertical_chain(2).unwrap();
    let stacked = genus5_stacked_definition();
    c.bench_function("kl_distance_unit", |bench| {
        bench.iter(|| kl_distance(black_box(&unit), 6).unwrap())
    });
    c.bench_function("symplectic_distance_chain2", |bench| {
        bench.iter(|| symplectic_distance(black_box(&chain2), 10).unwrap())
    });
    c.bench_function("normalizer_search_stacked", |bench| {
        bench.iter(|| normalizer_search(black_box(&stacked), 4).unwrap())
    });
}

fn dephasing_paths(c: &mut Criterion) {
    let unit = genus2_unit();
    let spec = DephasingSpec {
        model: DephasingModel::Local,
        gamma: 0.4,
        t: 1.2,
        theta: 1.1,
        phi: 0.7,
        pair_index: 0,
    };
    c.bench_function("dephase_local_unit", |bench| {
        bench.iter(|| dephase(black_box(&unit), black_box(&spec)).unwrap())
    });
    c.bench_function("bloch_coordinates_unit", |bench| {
        bench.iter(|| bloch_coordinates(black_box(&unit), black_box(&spec)).unwrap())
    });
    let grid = default_comparison_grid();
    c.bench_function("closed_form_comparison_grid", |bench| {
        bench.iter(|| compare_closed_form_with(black_box(&unit), 0, black_box(&grid)).unwrap())
    });
}

criterion_group!(
    benches,
    pauli_algebra,
    definition_diagnosis,
    state_encoding,
    distance_searches,
    dephasing_paths
);
criterion_main!(benches);
