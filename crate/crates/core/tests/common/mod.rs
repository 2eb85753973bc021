#![allow(dead_code)]

use mweb_core::{Biclique, Objective, WeightedBipartiteGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_int_graph(rng: &mut ChaCha8Rng, n1: usize, n2: usize, lo: i32, hi: i32) -> WeightedBipartiteGraph {
    let w = (0..n1 * n2).map(|_| rng.random_range(lo..=hi) as f64).collect();
    WeightedBipartiteGraph::new(n1, n2, w).unwrap()
}

/// Value of `(u1 mask, u2 mask)` summed cell by cell.
pub fn direct_value(g: &WeightedBipartiteGraph, m1: u64, m2: u64, objective: Objective) -> f64 {
    let mut total = 0.0;
    for u in 0..g.n1() {
        if m1 >> u & 1 == 0 {
            continue;
        }
        for v in 0..g.n2() {
            if m2 >> v & 1 == 1 {
                total += g.weight(u, v);
            }
        }
    }
    if objective == Objective::NodePlusEdge {
        total += (m1.count_ones() + m2.count_ones()) as f64;
    }
    total
}

/// Every (U1, U2) pair, no closure shortcut.
pub fn brute_force_optimum(g: &WeightedBipartiteGraph, objective: Objective) -> f64 {
    assert!(g.n1() + g.n2() <= 20);
    let mut best = f64::NEG_INFINITY;
    for m1 in 0u64..(1 << g.n1()) {
        for m2 in 0u64..(1 << g.n2()) {
            best = best.max(direct_value(g, m1, m2, objective));
        }
    }
    best
}

pub fn mask_of(idx: &[usize]) -> u64 {
    idx.iter().fold(0, |m, &i| m | 1 << i)
}

pub fn biclique_of(m1: u64, m2: u64, n1: usize, n2: usize) -> Biclique {
    Biclique::new((0..n1).filter(|&u| m1 >> u & 1 == 1).collect(), (0..n2).filter(|&v| m2 >> v & 1 == 1).collect())
}
