use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedBipartiteGraph;

/// Largest simple graph accepted by [`max_clique_size`].
pub const MAX_CLIQUE_ORACLE_VERTICES: usize = 64;

/// An undirected simple graph: vertices `0..n`, edges stored as `(lo, hi)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSimpleGraph", into = "RawSimpleGraph")]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawSimpleGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawSimpleGraph> for SimpleGraph {
    type Error = Error;

    fn try_from(raw: RawSimpleGraph) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::new(raw.n, &pairs)
    }
}

impl From<SimpleGraph> for RawSimpleGraph {
    fn from(g: SimpleGraph) -> Self {
        RawSimpleGraph { n: g.n, edges: g.edges.iter().map(|&(a, b)| [a, b]).collect() }
    }
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("a graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::Validation(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::Validation(format!("edge ({a}, {b}) out of range for {n} vertices")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Self { n, edges: set })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Self::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }
}

/// Two copies of `V` as the sides; `w(i, i) = 1`, `w(i, j) = 0` for edges
/// and `-1` for non-edges. The best biclique weight equals the clique number.
pub fn clique_to_mweb(g: &SimpleGraph) -> WeightedBipartiteGraph {
    let n = g.n();
    let mut weights = vec![-1.0; n * n];
    for i in 0..n {
        weights[i * n + i] = 1.0;
    }
    for (a, b) in g.edges() {
        weights[a * n + b] = 0.0;
        weights[b * n + a] = 0.0;
    }
    WeightedBipartiteGraph::new(n, n, weights).expect("n >= 1 and weights are finite")
}

/// Clique number by bitmask branching (include the lowest candidate or drop it).
pub fn max_clique_size(g: &SimpleGraph) -> Result<usize> {
    let n = g.n();
    if n > MAX_CLIQUE_ORACLE_VERTICES {
        return Err(Error::Capacity(format!(
            "clique oracle handles at most {MAX_CLIQUE_ORACLE_VERTICES} vertices, got {n}"
        )));
    }
    let mut adj = vec![0u64; n];
    for (a, b) in g.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    grow(&adj, 0, all, &mut best);
    Ok(best)
}

fn grow(adj: &[u64], size: usize, candidates: u64, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    grow(adj, size + 1, candidates & adj[v], best);
    grow(adj, size, candidates & !(1 << v), best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{biclique_weight, Biclique};

    #[test]
    fn triangle_matrix() {
        let k3 = SimpleGraph::complete(3).unwrap();
        let w = clique_to_mweb(&k3);
        assert_eq!(w.weights(), &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(biclique_weight(&w, &Biclique::full(&w)).unwrap(), 3.0);
        assert_eq!(max_clique_size(&k3).unwrap(), 3);
    }

    #[test]
    fn path_full_biclique_scores_one() {
        let p3 = SimpleGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let w = clique_to_mweb(&p3);
        assert_eq!(biclique_weight(&w, &Biclique::full(&w)).unwrap(), 1.0);
        assert_eq!(max_clique_size(&p3).unwrap(), 2);
    }

    #[test]
    fn edgeless_clique_number_is_one() {
        let g = SimpleGraph::new(4, &[]).unwrap();
        assert_eq!(max_clique_size(&g).unwrap(), 1);
    }

    #[test]
    fn rejects_self_loops_and_range() {
        assert!(SimpleGraph::new(3, &[(1, 1)]).is_err());
        assert!(SimpleGraph::new(3, &[(0, 3)]).is_err());
        assert!(SimpleGraph::new(0, &[]).is_err());
    }

    #[test]
    fn json_shape() {
        let g = SimpleGraph::new(3, &[(1, 0), (1, 2)]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let back: SimpleGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<SimpleGraph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
