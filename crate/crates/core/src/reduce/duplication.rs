use crate::error::{Error, Result};
use crate::graph::WeightedBipartiteGraph;

/// `N` copies of each side, every copy pair wired exactly like `g`.
/// Vertex `copy * n + inner` of the output maps to `inner`.
pub fn block_duplicate(g: &WeightedBipartiteGraph, n_copies: usize) -> Result<WeightedBipartiteGraph> {
    if n_copies == 0 {
        return Err(Error::Parameter("n_copies must be at least 1".into()));
    }
    let mut weights = Vec::with_capacity(n_copies * n_copies * g.weights().len());
    for _ in 0..n_copies {
        for i in 0..g.n1() {
            for _ in 0..n_copies {
                weights.extend_from_slice(g.row(i));
            }
        }
    }
    WeightedBipartiteGraph::new(n_copies * g.n1(), n_copies * g.n2(), weights)
}

/// `(n1 + n2)^2`.
pub fn default_problem_p_copies(g: &WeightedBipartiteGraph) -> usize {
    g.n() * g.n()
}

/// Duplicates a `{-1, 1}` graph so that edge weight dominates the vertex
/// count: with `N` copies the node-plus-edge optimum lies in
/// `[N^2 k, N^2 k + N (n1 + n2)]`, where `k` is the edge-weight optimum of `g`.
pub fn mweb_to_problem_p(g: &WeightedBipartiteGraph, n_copies: Option<usize>) -> Result<WeightedBipartiteGraph> {
    if g.weights().iter().any(|&w| w != 1.0 && w != -1.0) {
        log::warn!("mweb_to_problem_p: input has weights outside {{-1, 1}}");
    }
    block_duplicate(g, n_copies.unwrap_or_else(|| default_problem_p_copies(g)))
}

/// `(N^2 k, N^2 k + N n)` for edge-weight optimum `k` and `n = n1 + n2`.
pub fn problem_p_bounds(k: f64, n_copies: usize, n: usize) -> (f64, f64) {
    let nn = n_copies as f64;
    (nn * nn * k, nn * nn * k + nn * n as f64)
}
