//! Exact and heuristic maximization of the edge-weight and node-plus-edge
//! objectives over all bicliques of a [`WeightedBipartiteGraph`].
//!
//! All three solvers share the column-closure rule: once the left side `U1`
//! is fixed, the best right side contains exactly the columns whose
//! contribution `sum_{u in U1} w(u, v)` (plus the node bonus) is strictly
//! positive. Exact solving is therefore exponential only in the smaller side.

mod branch_bound;
mod exact;
mod local_search;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Biclique, Objective, WeightedBipartiteGraph};

pub use branch_bound::solve_branch_bound;
pub use exact::{closure_for_rows, solve_exact, solve_exact_with_cap};
pub use local_search::solve_local_search;

/// Largest smaller-side size accepted by exhaustive enumeration by default.
pub const DEFAULT_ENUMERATION_CAP: usize = 26;

/// Hard ceiling on the enumeration cap; masks are 64-bit.
pub const MAX_ENUMERATION_CAP: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactEnumeration,
    BranchAndBound,
    LocalSearch,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact-enumeration" | "exact" => Ok(Method::ExactEnumeration),
            "branch-and-bound" | "bnb" => Ok(Method::BranchAndBound),
            "local-search" => Ok(Method::LocalSearch),
            other => Err(Error::Parameter(format!("unknown solver method `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub objective: Objective,
    pub method: Method,
    pub seed: u64,
    /// Random restarts; local search only.
    pub restarts: usize,
    /// Wall-clock budget in seconds.
    pub time_limit: Option<f64>,
    pub enumeration_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            objective: Objective::EdgeWeight,
            method: Method::ExactEnumeration,
            seed: 0,
            restarts: 16,
            time_limit: None,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl SolverConfig {
    pub fn new(objective: Objective, method: Method) -> Self {
        Self { objective, method, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::Parameter("restarts must be at least 1".into()));
        }
        if let Some(t) = self.time_limit {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::Parameter(format!("time limit must be positive, got {t}")));
            }
        }
        if self.enumeration_cap > MAX_ENUMERATION_CAP {
            return Err(Error::Parameter(format!(
                "enumeration cap {} exceeds the supported maximum {MAX_ENUMERATION_CAP}",
                self.enumeration_cap
            )));
        }
        Ok(())
    }
}

/// Objective value, witness and search statistics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptResult {
    #[serde(flatten)]
    pub witness: Biclique,
    pub value: f64,
    pub explored: u64,
    pub optimal: bool,
    pub objective: Objective,
}

/// Dispatches on `config.method`.
pub fn solve(g: &WeightedBipartiteGraph, config: &SolverConfig) -> Result<OptResult> {
    config.validate()?;
    match config.method {
        Method::ExactEnumeration => solve_exact_with_cap(g, config.objective, config.enumeration_cap),
        Method::BranchAndBound => solve_branch_bound(g, config.objective, config),
        Method::LocalSearch => solve_local_search(g, config.objective, config),
    }
}

/// Exact when the smaller side fits the enumeration cap, branch-and-bound otherwise.
pub fn solve_optimal(g: &WeightedBipartiteGraph, objective: Objective) -> Result<OptResult> {
    if g.n1().min(g.n2()) <= DEFAULT_ENUMERATION_CAP {
        solve_exact(g, objective)
    } else {
        solve_branch_bound(g, objective, &SolverConfig::new(objective, Method::BranchAndBound))
    }
}

/// The graph with its smaller side as rows, plus the bookkeeping to map
/// witnesses back.
pub(crate) struct Oriented {
    pub work: WeightedBipartiteGraph,
    pub transposed: bool,
}

impl Oriented {
    pub fn new(g: &WeightedBipartiteGraph) -> Self {
        if g.n1() > g.n2() {
            Self { work: g.transpose(), transposed: true }
        } else {
            Self { work: g.clone(), transposed: false }
        }
    }

    pub fn to_original(&self, rows: Vec<usize>, cols: Vec<usize>) -> Biclique {
        if self.transposed {
            Biclique { u1: cols, u2: rows }
        } else {
            Biclique { u1: rows, u2: cols }
        }
    }
}

/// Closure witness for a set of working rows given precomputed column contributions.
pub(crate) fn closure_witness(o: &Oriented, rows: Vec<usize>, contributions: &[f64]) -> Biclique {
    let cols = contributions
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0.0)
        .map(|(v, _)| v)
        .collect();
    o.to_original(rows, cols)
}

/// Relative gap under which two objective values count as tied. Tied values
/// with real weights can differ in the last bits depending on summation order.
const TIE_TOLERANCE: f64 = 1e-12;

#[inline]
fn tie_slack(value: f64) -> f64 {
    TIE_TOLERANCE * value.abs().max(1.0)
}

/// Running best with the (value desc, witness lexicographic asc) order.
#[derive(Debug, Clone)]
pub(crate) struct Incumbent {
    pub value: f64,
    pub witness: Biclique,
}

impl Incumbent {
    /// True when `value` would replace the incumbent or ties with it
    /// (ties still need a witness comparison).
    #[inline]
    pub fn contends(this: &Option<Self>, value: f64) -> bool {
        match this {
            None => true,
            Some(b) => value >= b.value - tie_slack(b.value),
        }
    }

    pub fn offer(this: &mut Option<Self>, value: f64, witness: impl FnOnce() -> Biclique) {
        match this {
            None => *this = Some(Incumbent { value, witness: witness() }),
            Some(b) if value > b.value + tie_slack(b.value) => {
                *this = Some(Incumbent { value, witness: witness() })
            }
            Some(b) if value >= b.value - tie_slack(b.value) => {
                let w = witness();
                if w < b.witness {
                    b.witness = w;
                }
                b.value = b.value.max(value);
            }
            _ => {}
        }
    }

    pub fn merge(a: Option<Self>, b: Option<Self>) -> Option<Self> {
        match (a, b) {
            (None, x) | (x, None) => x,
            (a, Some(b)) => {
                let mut slot = a;
                Incumbent::offer(&mut slot, b.value, || b.witness);
                slot
            }
        }
    }
}
