use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mweb_bench::{binary_matrix, int_graph, ternary_graph};
use mweb_core::mdlh::solve_mdlh;
use mweb_core::reduce::{gamma_product, ProductParams};
use mweb_core::solve::{solve_branch_bound, solve_exact, solve_local_search};
use mweb_core::{Method, Objective, SolverConfig};

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    for n in [12usize, 16, 18] {
        let g = int_graph(n, 2 * n, -3, 2, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| solve_exact(black_box(g), Objective::EdgeWeight).unwrap())
        });
    }
    group.finish();
}

fn branch_and_bound(c: &mut Criterion) {
    let mut group = c.benchmark_group("branch_and_bound");
    let config = SolverConfig::new(Objective::EdgeWeight, Method::BranchAndBound);
    for n in [12usize, 16, 20] {
        let g = int_graph(n, 2 * n, -3, 2, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| solve_branch_bound(black_box(g), Objective::EdgeWeight, &config).unwrap())
        });
    }
    group.finish();
}

fn local_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("local_search");
    let config = SolverConfig { restarts: 8, seed: 1, ..SolverConfig::new(Objective::EdgeWeight, Method::LocalSearch) };
    for n in [32usize, 64, 128] {
        let g = int_graph(n, n, -3, 2, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| solve_local_search(black_box(g), Objective::EdgeWeight, &config).unwrap())
        });
    }
    group.finish();
}

fn product(c: &mut Criterion) {
    let mut group = c.benchmark_group("gamma_product");
    let g = ternary_graph(8, 8, 3);
    for copies in [4usize, 16, 64] {
        let params = ProductParams::ternary_to_binary(copies, 7).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(copies), &params, |b, p| {
            b.iter(|| gamma_product(black_box(&g), p).unwrap())
        });
    }
    group.finish();
}

fn mdlh(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_mdlh");
    for n in [8usize, 12, 16] {
        let m = binary_matrix(n, n + 4, 0.4, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| solve_mdlh(black_box(m)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, exact, branch_and_bound, local_search, product, mdlh);
criterion_main!(benches);
