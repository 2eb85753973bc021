use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    block_duplicate, clique_to_mweb, gamma_product, max_clique_size, problem_p_bounds, ProductParams,
    SimpleGraph,
};
use crate::error::{Error, Result};
use crate::graph::{Objective, WeightedBipartiteGraph};
use crate::solve::solve_exact;

/// Largest smaller side the brute-force biclique oracle accepts here.
pub const MAX_BICLIQUE_ORACLE_SIDE: usize = 20;
const MAX_CLIQUE_SIDE: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    Clique,
    Product,
    ProblemP,
}

/// What to verify. The `Random*` variants draw `trials` fresh instances.
#[derive(Debug, Clone)]
pub enum ReductionInstance {
    Clique(SimpleGraph),
    RandomClique { max_vertices: usize },
    Product { graph: WeightedBipartiteGraph, params: ProductParams },
    ProblemP { graph: WeightedBipartiteGraph, n_copies: usize },
    RandomProblemP { max_vertices: usize, n_copies: Option<usize> },
}

impl ReductionInstance {
    pub fn kind(&self) -> ReductionKind {
        match self {
            Self::Clique(_) | Self::RandomClique { .. } => ReductionKind::Clique,
            Self::Product { .. } => ReductionKind::Product,
            Self::ProblemP { .. } | Self::RandomProblemP { .. } => ReductionKind::ProblemP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equal,
    AtLeast,
    AtMost,
    /// `|observed - reference| < tolerance`
    Within,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub relation: Relation,
    pub observed: f64,
    pub reference: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    fn new(label: String, relation: Relation, observed: f64, reference: f64, tolerance: f64) -> Self {
        let pass = match relation {
            Relation::Equal => observed == reference,
            Relation::AtLeast => observed >= reference,
            Relation::AtMost => observed <= reference,
            Relation::Within => (observed - reference).abs() < tolerance,
        };
        Self { label, relation, observed, reference, tolerance, pass }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: ReductionKind,
    pub claimed_relation: String,
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// Runs the brute-force oracle for one reduction and reports every check.
pub fn verify_reduction(instance: &ReductionInstance, trials: usize, seed: u64) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::Parameter("trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let claimed_relation = match instance {
        ReductionInstance::Clique(g) => {
            checks.push(check_clique(g, "clique")?);
            "clique number equals the edge-weight optimum of the {-1,0,1} instance"
        }
        ReductionInstance::RandomClique { max_vertices } => {
            if *max_vertices == 0 {
                return Err(Error::Parameter("max_vertices must be at least 1".into()));
            }
            for t in 0..trials {
                let g = random_simple_graph(&mut rng, *max_vertices)?;
                checks.push(check_clique(&g, &format!("trial {t} (n = {})", g.n()))?);
            }
            "clique number equals the edge-weight optimum of the {-1,0,1} instance"
        }
        ReductionInstance::Product { graph, params } => {
            checks.extend(check_product(graph, params, trials, &mut rng)?);
            "former-gamma cells have empirical mean gamma; other cells are copied unchanged"
        }
        ReductionInstance::ProblemP { graph, n_copies } => {
            checks.extend(check_problem_p(graph, *n_copies, "instance")?);
            "N^2 k <= node-plus-edge optimum of the duplicate <= N^2 k + N (n1 + n2)"
        }
        ReductionInstance::RandomProblemP { max_vertices, n_copies } => {
            if *max_vertices < 2 {
                return Err(Error::Parameter("max_vertices must be at least 2".into()));
            }
            for t in 0..trials {
                let n = rng.random_range(2..=*max_vertices);
                let n1 = rng.random_range(1..n);
                let n2 = n - n1;
                let weights = (0..n1 * n2).map(|_| if rng.random_bool(0.5) { 1.0 } else { -1.0 }).collect();
                let g = WeightedBipartiteGraph::new(n1, n2, weights)?;
                let copies = n_copies.unwrap_or_else(|| rng.random_range(2..=4));
                checks.extend(check_problem_p(&g, copies, &format!("trial {t} ({n1}x{n2}, N = {copies})"))?);
            }
            "N^2 k <= node-plus-edge optimum of the duplicate <= N^2 k + N (n1 + n2)"
        }
    };
    let passed = checks.iter().all(|c| c.pass);
    Ok(VerificationReport {
        kind: instance.kind(),
        claimed_relation: claimed_relation.to_string(),
        trials,
        seed,
        checks,
        passed,
    })
}

fn random_simple_graph(rng: &mut ChaCha8Rng, max_vertices: usize) -> Result<SimpleGraph> {
    let n = rng.random_range(1..=max_vertices);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(0.5) {
                edges.push((a, b));
            }
        }
    }
    SimpleGraph::new(n, &edges)
}

fn check_clique(g: &SimpleGraph, label: &str) -> Result<Check> {
    if g.n() > MAX_CLIQUE_SIDE {
        return Err(Error::Capacity(format!(
            "clique verification handles at most {MAX_CLIQUE_SIDE} vertices, got {}",
            g.n()
        )));
    }
    let omega = max_clique_size(g)?;
    let opt = solve_exact(&clique_to_mweb(g), Objective::EdgeWeight)?.value;
    Ok(Check::new(label.to_string(), Relation::Equal, opt, omega as f64, 0.0))
}

fn check_problem_p(g: &WeightedBipartiteGraph, n_copies: usize, label: &str) -> Result<Vec<Check>> {
    let side = n_copies * g.n1().min(g.n2());
    if side > MAX_BICLIQUE_ORACLE_SIDE {
        return Err(Error::Capacity(format!(
            "duplicate has smaller side {side}, oracle limit is {MAX_BICLIQUE_ORACLE_SIDE}"
        )));
    }
    let k = solve_exact(g, Objective::EdgeWeight)?.value;
    let dup = block_duplicate(g, n_copies)?;
    let opt = solve_exact(&dup, Objective::NodePlusEdge)?.value;
    let (lo, hi) = problem_p_bounds(k, n_copies, g.n());
    Ok(vec![
        Check::new(format!("{label}: lower"), Relation::AtLeast, opt, lo, 0.0),
        Check::new(format!("{label}: upper"), Relation::AtMost, opt, hi, 0.0),
    ])
}

fn check_product(
    g: &WeightedBipartiteGraph,
    params: &ProductParams,
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Check>> {
    let base = block_duplicate(g, params.n_copies)?;
    let gamma_cells: Vec<usize> =
        base.weights().iter().enumerate().filter(|(_, &w)| w == params.gamma).map(|(i, _)| i).collect();
    let mut sums = vec![0.0; gamma_cells.len()];
    let mut copied_ok = true;
    for _ in 0..trials {
        let p = ProductParams { seed: rng.next_u64(), ..*params };
        let out = gamma_product(g, &p)?;
        for (s, &i) in sums.iter_mut().zip(&gamma_cells) {
            *s += out.weights()[i];
        }
        copied_ok &= out
            .weights()
            .iter()
            .zip(base.weights())
            .all(|(o, b)| *b == params.gamma || o.to_bits() == b.to_bits());
    }
    let se = params.cell_std_dev() / (trials as f64).sqrt();
    let mut checks: Vec<Check> = gamma_cells
        .iter()
        .zip(&sums)
        .map(|(&i, s)| {
            let (r, c) = (i / base.n2(), i % base.n2());
            Check::new(format!("cell ({r}, {c}) mean"), Relation::Within, s / trials as f64, params.gamma, 4.0 * se)
        })
        .collect();
    checks.push(Check::new(
        "non-gamma cells unchanged".into(),
        Relation::Equal,
        if copied_ok { 1.0 } else { 0.0 },
        1.0,
        0.0,
    ));
    Ok(checks)
}
