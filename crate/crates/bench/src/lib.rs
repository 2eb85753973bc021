//! Seeded instance generators shared by the benchmarks.

use mweb_core::{BinaryMatrix, WeightedBipartiteGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `n1 x n2` graph with integer weights drawn uniformly from `lo..=hi`.
pub fn int_graph(n1: usize, n2: usize, lo: i32, hi: i32, seed: u64) -> WeightedBipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = (0..n1 * n2).map(|_| rng.random_range(lo..=hi) as f64).collect();
    WeightedBipartiteGraph::new(n1, n2, w).expect("finite weights")
}

/// `{-1, 0, 1}` graph.
pub fn ternary_graph(n1: usize, n2: usize, seed: u64) -> WeightedBipartiteGraph {
    int_graph(n1, n2, -1, 1, seed)
}

/// Binary matrix with independent cells of the given density.
pub fn binary_matrix(n1: usize, n2: usize, density: f64, seed: u64) -> BinaryMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells = (0..n1 * n2).map(|_| rng.random_bool(density)).collect();
    BinaryMatrix::new(n1, n2, cells).expect("cell count matches")
}
