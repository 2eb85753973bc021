use mweb_core::{solve, Method, Objective, OptResult, SolverConfig, WeightedBipartiteGraph};

use super::{read_graph, require_seed, Outcome, Status};
use crate::args::{SolveArgs, SolverArgs};
use crate::error::CliResult;
use crate::manifest::{with_manifest, RunManifest};

pub fn run(a: &SolveArgs, timing: impl Fn() -> Option<f64>) -> CliResult<Outcome> {
    let g = read_graph(&a.input)?;
    let (config, seed) = solver_config(&a.solver, a.objective)?;
    let r = run_solver(&g, &config)?;
    let mut manifest = RunManifest::new("solve", a, seed);
    manifest.timing = timing();
    let status = status_of(&r);
    Ok(Outcome::new(with_manifest(&r, &manifest), &a.out.out).with_status(status))
}

/// Builds the solver configuration; the seed is only required by local search.
pub fn solver_config(a: &SolverArgs, objective: Objective) -> CliResult<(SolverConfig, Option<u64>)> {
    let seed = match a.method {
        Method::LocalSearch => Some(require_seed(a.seed, "local search")?),
        _ => None,
    };
    let config = SolverConfig {
        objective,
        method: a.method,
        seed: seed.unwrap_or(0),
        restarts: a.restarts,
        time_limit: a.time_limit,
        enumeration_cap: a.enumeration_cap,
    };
    config.validate()?;
    Ok((config, seed))
}

pub fn run_solver(g: &WeightedBipartiteGraph, config: &SolverConfig) -> CliResult<OptResult> {
    let r = solve(g, config)?;
    log::info!("explored {} nodes, value {}, optimal {}", r.explored, r.value, r.optimal);
    Ok(r)
}

pub fn status_of(r: &OptResult) -> Status {
    if r.optimal {
        Status::Ok
    } else {
        Status::BestEffort
    }
}
