//! Statistical bicluster scoring: log-odds edge weights under a global
//! density (simple model) or per-cell background probabilities (refined
//! model), so that the heaviest biclique is the most significant bicluster.
//!
//! Logarithms are base 2 unless a [`LogBase`] is passed explicitly. Changing
//! the base multiplies every weight by the same positive constant and leaves
//! the optimal bicluster unchanged. Probabilities are handled in log space;
//! [`p_star`] and [`binomial_tail`] return `0.0` once the true value drops
//! below `f64::MIN_POSITIVE` (about `2^-1022`), use the `log2_*` variants
//! beyond that.

use serde::{Deserialize, Serialize};
use statrs::function::factorial::ln_binomial;

pub use crate::binary::BinaryMatrix as BinaryExpressionMatrix;
use crate::binary::BinaryMatrix;
use crate::error::{Error, Result};
use crate::graph::{biclique_weight, Biclique, Objective, WeightedBipartiteGraph};
use crate::solve::{solve, SolverConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LogBase {
    #[default]
    Two,
    E,
}

impl LogBase {
    #[inline]
    pub fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Two => x.log2(),
            LogBase::E => x.ln(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SambaSimpleParams {
    /// Global density `|E| / (|V1| |V2|)`.
    pub p: f64,
    /// `-1 - log p` (base 2).
    pub w_edge: f64,
    /// `-1 - log (1 - p)` (base 2).
    pub w_nonedge: f64,
}

impl SambaSimpleParams {
    /// The model is meant for sparse data, `p < 1/2`.
    pub fn is_sparse(&self) -> bool {
        self.p < 0.5
    }
}

/// Per-cell background probabilities and the constant `p_c`, as read from
/// the refined-parameter JSON `{"p": [row-major], "p_c": x}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SambaRefinedParams {
    pub p: Vec<f64>,
    pub p_c: f64,
}

impl SambaRefinedParams {
    pub fn uniform(n1: usize, n2: usize, p: f64, p_c: f64) -> Self {
        Self { p: vec![p; n1 * n2], p_c }
    }

    pub fn validate(&self, n1: usize, n2: usize) -> Result<()> {
        if self.p.len() != n1 * n2 {
            return Err(Error::DimensionMismatch(format!(
                "{} probabilities for a {n1}x{n2} matrix",
                self.p.len()
            )));
        }
        if !(self.p_c > 0.0 && self.p_c < 1.0) {
            return Err(Error::Parameter(format!("p_c must lie in (0, 1), got {}", self.p_c)));
        }
        for (k, &p) in self.p.iter().enumerate() {
            if !(p > 0.0 && p < 1.0) {
                return Err(Error::Parameter(format!("p at ({}, {}) = {p} is outside (0, 1)", k / n2, k % n2)));
            }
            if p >= self.p_c {
                return Err(Error::Parameter(format!(
                    "p_c = {} does not exceed p at ({}, {}) = {p}",
                    self.p_c,
                    k / n2,
                    k % n2
                )));
            }
        }
        Ok(())
    }
}

/// Simple-model weights in base 2.
pub fn simple_weights(m: &BinaryMatrix) -> Result<(WeightedBipartiteGraph, SambaSimpleParams)> {
    simple_weights_in_base(m, LogBase::Two)
}

/// Simple-model weights: `-log(2p)` on 1-cells, `-log(2(1-p))` on 0-cells,
/// which is `-1 - log2 p` and `-1 - log2(1-p)` in base 2.
pub fn simple_weights_in_base(
    m: &BinaryMatrix,
    base: LogBase,
) -> Result<(WeightedBipartiteGraph, SambaSimpleParams)> {
    let ones = m.ones();
    if ones == 0 || ones == m.cells().len() {
        return Err(Error::DegenerateDensity);
    }
    let p = ones as f64 / m.cells().len() as f64;
    let w_edge = -base.log(2.0 * p);
    let w_nonedge = -base.log(2.0 * (1.0 - p));
    let params = SambaSimpleParams { p, w_edge, w_nonedge };
    if !params.is_sparse() {
        log::warn!("density p = {p} is not below 1/2; the simple model assumes sparse data");
    }
    let weights = m.cells().iter().map(|&c| if c { w_edge } else { w_nonedge }).collect();
    Ok((WeightedBipartiteGraph::new(m.n1(), m.n2(), weights)?, params))
}

/// Statistical significance: the biclique weight on simple-model weights,
/// i.e. `-log p*(H)`.
pub fn significance(weighted: &WeightedBipartiteGraph, b: &Biclique) -> Result<f64> {
    biclique_weight(weighted, b)
}

/// `|E'| w_edge + (cells - |E'|) w_nonedge`.
pub fn closed_form_significance(params: &SambaSimpleParams, cells: usize, edges: usize) -> f64 {
    edges as f64 * params.w_edge + (cells - edges) as f64 * params.w_nonedge
}

fn check_probability(p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::Parameter(format!("probability must lie in (0, 1), got {p}")))
    }
}

/// `log2 p*` with `p* = 2^cells p^edges (1-p)^(cells-edges)`.
pub fn log2_p_star(cells: u64, edges: u64, p: f64) -> Result<f64> {
    check_probability(p)?;
    if edges > cells {
        return Err(Error::Parameter(format!("edges ({edges}) exceed cells ({cells})")));
    }
    Ok(cells as f64 + edges as f64 * p.log2() + (cells - edges) as f64 * (1.0 - p).log2())
}

pub fn p_star(cells: u64, edges: u64, p: f64) -> Result<f64> {
    Ok(log2_p_star(cells, edges, p)?.exp2())
}

/// Natural log of `P[X >= k]` for `X ~ Binomial(n, p)`, by log-sum-exp over
/// the exact terms.
pub fn ln_binomial_tail(k: u64, p: f64, n: u64) -> Result<f64> {
    check_probability(p)?;
    if k > n {
        return Err(Error::Parameter(format!("k ({k}) exceeds n ({n})")));
    }
    if k == 0 {
        return Ok(0.0);
    }
    let (lp, lq) = (p.ln(), (-p).ln_1p());
    let terms: Vec<f64> = (k..=n).map(|i| ln_binomial(n, i) + i as f64 * lp + (n - i) as f64 * lq).collect();
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = terms.iter().map(|t| (t - max).exp()).sum();
    Ok((max + sum.ln()).min(0.0))
}

/// `BT(k, p, n)`: probability of `k` or more successes in `n` trials.
pub fn binomial_tail(k: u64, p: f64, n: u64) -> Result<f64> {
    Ok(ln_binomial_tail(k, p, n)?.exp())
}

pub fn refined_weights(m: &BinaryMatrix, r: &SambaRefinedParams) -> Result<WeightedBipartiteGraph> {
    refined_weights_in_base(m, r, LogBase::Two)
}

/// `log(p_c / p_uv)` on 1-cells and `log((1 - p_c) / (1 - p_uv))` on 0-cells.
pub fn refined_weights_in_base(
    m: &BinaryMatrix,
    r: &SambaRefinedParams,
    base: LogBase,
) -> Result<WeightedBipartiteGraph> {
    r.validate(m.n1(), m.n2())?;
    let weights = m
        .cells()
        .iter()
        .zip(&r.p)
        .map(|(&c, &p)| if c { base.log(r.p_c / p) } else { base.log((1.0 - r.p_c) / (1.0 - p)) })
        .collect();
    WeightedBipartiteGraph::new(m.n1(), m.n2(), weights)
}

/// `log L(H)`: the biclique weight on refined-model weights.
pub fn log_likelihood_ratio(weighted: &WeightedBipartiteGraph, b: &Biclique) -> Result<f64> {
    biclique_weight(weighted, b)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "model")]
pub enum BiclusterModel {
    Simple,
    Refined(SambaRefinedParams),
}

/// Weighs `m` under `model` and returns the heaviest biclique and its score.
/// The solver always runs on the edge-weight objective.
pub fn find_bicluster(
    m: &BinaryMatrix,
    model: &BiclusterModel,
    config: &SolverConfig,
) -> Result<(Biclique, f64)> {
    let g = match model {
        BiclusterModel::Simple => simple_weights(m)?.0,
        BiclusterModel::Refined(r) => refined_weights(m, r)?,
    };
    let config = SolverConfig { objective: Objective::EdgeWeight, ..config.clone() };
    let r = solve(&g, &config)?;
    Ok((r.witness, r.value))
}
