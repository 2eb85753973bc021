use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{evaluate, Biclique, Objective, WeightedBipartiteGraph};

/// Parameters of the `{gamma, {alpha, beta}}` product.
///
/// `q` is the probability of drawing `beta`; it is always
/// `(gamma - alpha) / (beta - alpha)`, the only value giving expectation
/// `gamma` on the support `{alpha, beta}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProductParams {
    pub gamma: f64,
    pub alpha: f64,
    pub beta: f64,
    pub n_copies: usize,
    pub delta: f64,
    pub q: f64,
    pub seed: u64,
}

impl ProductParams {
    pub fn new(gamma: f64, alpha: f64, beta: f64, n_copies: usize, seed: u64) -> Result<Self> {
        Self::with_delta(gamma, alpha, beta, n_copies, 0.5, seed)
    }

    pub fn with_delta(
        gamma: f64,
        alpha: f64,
        beta: f64,
        n_copies: usize,
        delta: f64,
        seed: u64,
    ) -> Result<Self> {
        if ![gamma, alpha, beta].iter().all(|x| x.is_finite()) {
            return Err(Error::Parameter("gamma, alpha and beta must be finite".into()));
        }
        if !(alpha < gamma && gamma < beta) {
            return Err(Error::Parameter(format!(
                "need alpha < gamma < beta, got alpha = {alpha}, gamma = {gamma}, beta = {beta}"
            )));
        }
        if n_copies == 0 {
            return Err(Error::Parameter("n_copies must be at least 1".into()));
        }
        if !(delta > 0.0 && delta <= 0.5) {
            return Err(Error::Parameter(format!("delta must lie in (0, 1/2], got {delta}")));
        }
        let q = (gamma - alpha) / (beta - alpha);
        Ok(Self { gamma, alpha, beta, n_copies, delta, q, seed })
    }

    /// `{-1, 0, 1}` to `{-1, 1}`: gamma = 0, alpha = -1, beta = 1.
    pub fn ternary_to_binary(n_copies: usize, seed: u64) -> Result<Self> {
        Self::new(0.0, -1.0, 1.0, n_copies, seed)
    }

    /// `{-1, 1}` to a set with a large negative weight:
    /// gamma = -1, alpha = -(N eta)^(1/2 - delta), beta = 1.
    pub fn binary_to_negative_skew(eta: usize, n_copies: usize, delta: f64, seed: u64) -> Result<Self> {
        let spread = ((n_copies * eta) as f64).powf(0.5 - delta);
        Self::with_delta(-1.0, -spread, 1.0, n_copies, delta, seed)
    }

    /// `{-1, 1}` to a set with a large positive weight:
    /// gamma = 1, alpha = -1, beta = (N eta)^(1/2 - delta).
    pub fn binary_to_positive_skew(eta: usize, n_copies: usize, delta: f64, seed: u64) -> Result<Self> {
        let spread = ((n_copies * eta) as f64).powf(0.5 - delta);
        Self::with_delta(1.0, -1.0, spread, n_copies, delta, seed)
    }

    /// Standard deviation of one redrawn cell.
    pub fn cell_std_dev(&self) -> f64 {
        (self.beta - self.alpha) * (self.q * (1.0 - self.q)).sqrt()
    }
}

/// Builds the `(N n1) x (N n2)` product. Product vertex `copy * n + inner`
/// maps to `inner`; cells whose original weight differs from `gamma` are
/// copied, and every former-gamma cell is an independent draw (`beta` with
/// probability `q`, else `alpha`) from a ChaCha stream seeded by `p.seed`,
/// consumed in row-major order.
pub fn gamma_product(g: &WeightedBipartiteGraph, p: &ProductParams) -> Result<WeightedBipartiteGraph> {
    ProductParams::with_delta(p.gamma, p.alpha, p.beta, p.n_copies, p.delta, p.seed)?;
    let n = p.n_copies;
    let (n1, n2) = (g.n1(), g.n2());
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut weights = Vec::with_capacity(n * n1 * n * n2);
    for _ in 0..n {
        for i in 0..n1 {
            let row = g.row(i);
            for _ in 0..n {
                for &w in row {
                    weights.push(if w == p.gamma {
                        if rng.random_bool(p.q) {
                            p.beta
                        } else {
                            p.alpha
                        }
                    } else {
                        w
                    });
                }
            }
        }
    }
    WeightedBipartiteGraph::new(n * n1, n * n2, weights)
}

/// Splits `b` into its `N^2` block projections onto `g`, scores each under
/// `objective` and returns the best one (ties: lexicographically smallest).
pub fn project_solution(
    g: &WeightedBipartiteGraph,
    product: &WeightedBipartiteGraph,
    n_copies: usize,
    b: &Biclique,
    objective: Objective,
) -> Result<(Biclique, f64)> {
    if n_copies == 0
        || product.n1() != n_copies * g.n1()
        || product.n2() != n_copies * g.n2()
    {
        return Err(Error::DimensionMismatch(format!(
            "product is {}x{}, expected {} copies of {}x{}",
            product.n1(),
            product.n2(),
            n_copies,
            g.n1(),
            g.n2()
        )));
    }
    b.validate(product)?;
    let split = |idx: &[usize], n: usize| {
        let mut blocks = vec![Vec::new(); n_copies];
        for &x in idx {
            blocks[x / n].push(x % n);
        }
        blocks
    };
    let left = split(&b.u1, g.n1());
    let right = split(&b.u2, g.n2());

    let mut best: Option<(Biclique, f64)> = None;
    for l in &left {
        for r in &right {
            let cand = Biclique::new(l.clone(), r.clone());
            let value = evaluate(g, &cand, objective)?;
            let better = match &best {
                None => true,
                Some((bw, bv)) => value > *bv || (value == *bv && cand < *bw),
            };
            if better {
                best = Some((cand, value));
            }
        }
    }
    Ok(best.expect("n_copies >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::biclique_weight;

    #[test]
    fn symmetric_support_gives_half() {
        let p = ProductParams::ternary_to_binary(1, 0).unwrap();
        assert_eq!(p.q, 0.5);
    }

    #[test]
    fn no_gamma_cells_is_pure_duplication() {
        let g = WeightedBipartiteGraph::from_rows(&[[5.0]]).unwrap();
        let p = ProductParams::ternary_to_binary(3, 9).unwrap();
        let out = gamma_product(&g, &p).unwrap();
        assert_eq!((out.n1(), out.n2()), (3, 3));
        assert!(out.weights().iter().all(|&w| w == 5.0));
    }

    #[test]
    fn gamma_cells_are_redrawn() {
        let g = WeightedBipartiteGraph::from_rows(&[[0.0, 1.0], [0.0, 1.0]]).unwrap();
        let p = ProductParams::ternary_to_binary(2, 42).unwrap();
        let out = gamma_product(&g, &p).unwrap();
        assert_eq!((out.n1(), out.n2()), (4, 4));
        for a in 0..4 {
            for b in 0..4 {
                let w = out.weight(a, b);
                if b % 2 == 0 {
                    assert!(w == 1.0 || w == -1.0);
                } else {
                    assert_eq!(w, 1.0);
                }
            }
        }
        assert_eq!(gamma_product(&g, &p).unwrap(), out);
    }

    #[test]
    fn rejects_bad_ordering() {
        assert!(ProductParams::new(2.0, -1.0, 1.0, 1, 0).is_err());
        assert!(ProductParams::new(0.0, -1.0, 1.0, 0, 0).is_err());
        assert!(ProductParams::binary_to_negative_skew(4, 4, 0.5, 0).is_err());
        let p = ProductParams::binary_to_negative_skew(4, 4, 0.25, 0).unwrap();
        assert!((p.alpha + 2.0).abs() < 1e-12);
    }

    #[test]
    fn single_block_projection_is_identity() {
        let g = WeightedBipartiteGraph::from_rows(&[[1.0, -2.0], [3.0, 4.0]]).unwrap();
        let dup = crate::reduce::block_duplicate(&g, 3).unwrap();
        // rows 2,3 and columns 4,5 sit in blocks (1, 2).
        let b = Biclique::new(vec![2, 3], vec![4, 5]);
        let (proj, value) = project_solution(&g, &dup, 3, &b, Objective::EdgeWeight).unwrap();
        assert_eq!(proj, Biclique::full(&g));
        assert_eq!(value, biclique_weight(&g, &Biclique::full(&g)).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let g = WeightedBipartiteGraph::from_rows(&[[1.0, -2.0]]).unwrap();
        let err = project_solution(&g, &g, 2, &Biclique::empty(), Objective::EdgeWeight).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
    }
}
