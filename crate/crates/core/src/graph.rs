//! Dense weighted bipartite graphs, bicliques and the two objectives
//! every solver in this crate maximizes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Side};

/// A complete bipartite graph `(V1, V2)` stored as a dense row-major
/// `n1 x n2` matrix of finite edge weights.
///
/// Non-edges of an incomplete graph are represented by weight `0`, see
/// [`WeightedBipartiteGraph::from_edges`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct WeightedBipartiteGraph {
    n1: usize,
    n2: usize,
    weights: Vec<f64>,
}

/// Interchange shape: `{"n1": .., "n2": .., "weights": [row-major]}`.
#[derive(Serialize, Deserialize)]
struct RawGraph {
    n1: usize,
    n2: usize,
    weights: Vec<f64>,
}

impl TryFrom<RawGraph> for WeightedBipartiteGraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Self::new(raw.n1, raw.n2, raw.weights)
    }
}

impl From<WeightedBipartiteGraph> for RawGraph {
    fn from(g: WeightedBipartiteGraph) -> Self {
        RawGraph { n1: g.n1, n2: g.n2, weights: g.weights }
    }
}

impl WeightedBipartiteGraph {
    /// Builds a graph from a row-major weight vector of length `n1 * n2`.
    pub fn new(n1: usize, n2: usize, weights: Vec<f64>) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(Error::Validation(format!(
                "both sides must be non-empty (n1 = {n1}, n2 = {n2})"
            )));
        }
        if weights.len() != n1 * n2 {
            return Err(Error::DimensionMismatch(format!(
                "expected {} weights for a {n1}x{n2} graph, got {}",
                n1 * n2,
                weights.len()
            )));
        }
        if let Some(pos) = weights.iter().position(|w| !w.is_finite()) {
            return Err(Error::Validation(format!(
                "weight at ({}, {}) is not finite",
                pos / n2,
                pos % n2
            )));
        }
        Ok(Self { n1, n2, weights })
    }

    /// Builds a graph from nested rows. All rows must have equal length.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n1 = rows.len();
        let n2 = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut weights = Vec::with_capacity(n1 * n2);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n2 {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {n2}",
                    row.len()
                )));
            }
            weights.extend_from_slice(row);
        }
        Self::new(n1, n2, weights)
    }

    /// Builds a complete graph from a sparse edge list; every pair that is
    /// not listed gets weight `0`.
    pub fn from_edges(n1: usize, n2: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let mut weights = vec![0.0; n1 * n2];
        for &(u, v, w) in edges {
            if u >= n1 {
                return Err(Error::IndexOutOfRange { side: Side::Left, index: u, len: n1 });
            }
            if v >= n2 {
                return Err(Error::IndexOutOfRange { side: Side::Right, index: v, len: n2 });
            }
            weights[u * n2 + v] = w;
        }
        Self::new(n1, n2, weights)
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    /// `max(n1, n2)`.
    pub fn eta(&self) -> usize {
        self.n1.max(self.n2)
    }

    /// Total vertex count `n1 + n2`.
    pub fn n(&self) -> usize {
        self.n1 + self.n2
    }

    #[inline]
    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.weights[u * self.n2 + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[f64] {
        &self.weights[u * self.n2..(u + 1) * self.n2]
    }

    /// Row-major weights.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn transpose(&self) -> Self {
        let mut weights = Vec::with_capacity(self.weights.len());
        for v in 0..self.n2 {
            for u in 0..self.n1 {
                weights.push(self.weight(u, v));
            }
        }
        Self { n1: self.n2, n2: self.n1, weights }
    }

    /// Multiplies every weight by `factor` (which must be finite and positive).
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(Error::Parameter(format!("scale factor must be positive, got {factor}")));
        }
        Self::new(self.n1, self.n2, self.weights.iter().map(|w| w * factor).collect())
    }

    /// True when every weight is an integer.
    pub fn is_integral(&self) -> bool {
        self.weights.iter().all(|w| w.fract() == 0.0)
    }
}

/// A biclique `U1 x U2`, stored as two sorted, duplicate-free index sets.
/// Either side may be empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Biclique {
    pub u1: Vec<usize>,
    pub u2: Vec<usize>,
}

impl Biclique {
    pub fn new(mut u1: Vec<usize>, mut u2: Vec<usize>) -> Self {
        u1.sort_unstable();
        u1.dedup();
        u2.sort_unstable();
        u2.dedup();
        Self { u1, u2 }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The whole vertex set of `g`.
    pub fn full(g: &WeightedBipartiteGraph) -> Self {
        Self { u1: (0..g.n1()).collect(), u2: (0..g.n2()).collect() }
    }

    pub fn from_masks(in1: &[bool], in2: &[bool]) -> Self {
        let pick = |m: &[bool]| m.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
        Self { u1: pick(in1), u2: pick(in2) }
    }

    pub fn is_empty(&self) -> bool {
        self.u1.is_empty() || self.u2.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.u1.len() + self.u2.len()
    }

    pub fn transpose(&self) -> Self {
        Self { u1: self.u2.clone(), u2: self.u1.clone() }
    }

    /// Checks that every index fits `g`; reports the first offender.
    pub fn validate(&self, g: &WeightedBipartiteGraph) -> Result<()> {
        if let Some(&i) = self.u1.iter().find(|&&i| i >= g.n1()) {
            return Err(Error::IndexOutOfRange { side: Side::Left, index: i, len: g.n1() });
        }
        if let Some(&j) = self.u2.iter().find(|&&j| j >= g.n2()) {
            return Err(Error::IndexOutOfRange { side: Side::Right, index: j, len: g.n2() });
        }
        Ok(())
    }
}

/// Which function of a biclique is being maximized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    /// Sum of edge weights inside `U1 x U2`.
    EdgeWeight,
    /// `|U1| + |U2|` plus the edge-weight sum.
    NodePlusEdge,
}

impl Objective {
    /// Per-vertex bonus under this objective.
    #[inline]
    pub fn node_bonus(self) -> f64 {
        match self {
            Objective::EdgeWeight => 0.0,
            Objective::NodePlusEdge => 1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Objective::EdgeWeight => "edge-weight",
            Objective::NodePlusEdge => "node-plus-edge",
        }
    }
}

impl std::fmt::Display for Objective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-weight" => Ok(Objective::EdgeWeight),
            "node-plus-edge" => Ok(Objective::NodePlusEdge),
            other => Err(Error::Parameter(format!("unknown objective `{other}`"))),
        }
    }
}

/// Sum of `w(u, v)` over `u in u1`, `v in u2`. Zero when either side is empty.
pub fn biclique_weight(g: &WeightedBipartiteGraph, b: &Biclique) -> Result<f64> {
    b.validate(g)?;
    Ok(weight_unchecked(g, b))
}

pub(crate) fn weight_unchecked(g: &WeightedBipartiteGraph, b: &Biclique) -> f64 {
    let mut total = 0.0;
    for &u in &b.u1 {
        let row = g.row(u);
        for &v in &b.u2 {
            total += row[v];
        }
    }
    total
}

/// `|u1| + |u2| + biclique_weight(g, b)`.
pub fn problem_p_value(g: &WeightedBipartiteGraph, b: &Biclique) -> Result<f64> {
    Ok(b.vertex_count() as f64 + biclique_weight(g, b)?)
}

/// Evaluates `b` under `objective`.
pub fn evaluate(g: &WeightedBipartiteGraph, b: &Biclique, objective: Objective) -> Result<f64> {
    match objective {
        Objective::EdgeWeight => biclique_weight(g, b),
        Objective::NodePlusEdge => problem_p_value(g, b),
    }
}

/// Summary of the weight set `S` a graph draws from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightSetDescriptor {
    pub min_weight: f64,
    pub max_weight: f64,
    /// `|min S / max S|`.
    pub ratio: f64,
}

impl WeightSetDescriptor {
    pub fn new(min_weight: f64, max_weight: f64) -> Result<Self> {
        if !(min_weight < 0.0 && max_weight > 0.0) {
            return Err(Error::TrivialInstance { min: min_weight, max: max_weight });
        }
        Ok(Self { min_weight, max_weight, ratio: (min_weight / max_weight).abs() })
    }
}

/// Min and max over all entries of `g`. Fails when the weights do not
/// straddle zero: with one sign only the problem is trivial (take everything
/// or nothing).
pub fn weight_set_of(g: &WeightedBipartiteGraph) -> Result<WeightSetDescriptor> {
    let (min, max) = g
        .weights()
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &w| (lo.min(w), hi.max(w)));
    WeightSetDescriptor::new(min, max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(rows: &[&[f64]]) -> WeightedBipartiteGraph {
        WeightedBipartiteGraph::from_rows(rows).unwrap()
    }

    #[test]
    fn single_cell_weight() {
        let g = g(&[&[1.0, -1.0], &[-1.0, 1.0]]);
        assert_eq!(biclique_weight(&g, &Biclique::new(vec![0], vec![0])).unwrap(), 1.0);
    }

    #[test]
    fn empty_side_weighs_zero() {
        let g = g(&[&[1.0, -1.0], &[-1.0, 1.0]]);
        assert_eq!(biclique_weight(&g, &Biclique::new(vec![], vec![0, 1])).unwrap(), 0.0);
        assert_eq!(problem_p_value(&g, &Biclique::new(vec![], vec![0, 1])).unwrap(), 2.0);
    }

    #[test]
    fn out_of_range_index_is_named() {
        let g = g(&[&[1.0, -1.0]]);
        let err = biclique_weight(&g, &Biclique::new(vec![0], vec![5])).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { side: Side::Right, index: 5, len: 2 });
        assert!(err.to_string().contains('5'));
    }

    #[test]
    fn problem_p_examples() {
        assert_eq!(problem_p_value(&g(&[&[-1.0]]), &Biclique::new(vec![0], vec![0])).unwrap(), 1.0);
        assert_eq!(problem_p_value(&g(&[&[1.0]]), &Biclique::new(vec![0], vec![0])).unwrap(), 3.0);
        let h = g(&[&[-1.0, 1.0], &[1.0, -1.0]]);
        assert_eq!(problem_p_value(&h, &Biclique::new(vec![0], vec![1])).unwrap(), 3.0);
    }

    #[test]
    fn weight_set_examples() {
        let d = weight_set_of(&g(&[&[1.0, -1.0], &[-1.0, 1.0]])).unwrap();
        assert_eq!((d.min_weight, d.max_weight, d.ratio), (-1.0, 1.0, 1.0));
        let d = weight_set_of(&g(&[&[2.0, -6.0], &[3.0, -6.0]])).unwrap();
        assert_eq!((d.min_weight, d.max_weight, d.ratio), (-6.0, 3.0, 2.0));
        let err = weight_set_of(&g(&[&[1.0, 2.0], &[3.0, 4.0]])).unwrap_err();
        assert!(matches!(err, Error::TrivialInstance { .. }));
        assert!(err.to_string().contains("trivial instance"));
    }

    #[test]
    fn rejects_bad_shapes_and_nan() {
        assert!(WeightedBipartiteGraph::new(0, 2, vec![]).is_err());
        assert!(WeightedBipartiteGraph::new(1, 2, vec![1.0]).is_err());
        assert!(WeightedBipartiteGraph::new(1, 1, vec![f64::NAN]).is_err());
        assert!(WeightedBipartiteGraph::new(1, 1, vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn incomplete_graph_fills_zero() {
        let g = WeightedBipartiteGraph::from_edges(2, 2, &[(0, 1, 3.0)]).unwrap();
        assert_eq!(g.weights(), &[0.0, 3.0, 0.0, 0.0]);
        assert_eq!((g.eta(), g.n()), (2, 4));
    }

    #[test]
    fn transpose_swaps_sides() {
        let g = g(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]]);
        let t = g.transpose();
        assert_eq!((t.n1(), t.n2()), (3, 2));
        assert_eq!(t.weight(2, 1), 6.0);
        assert_eq!(t.transpose(), g);
    }
}
