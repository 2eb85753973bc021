use mweb_core::reduce::{
    amplification_factor, boosting_exponent, clique_to_mweb, gamma_product, mweb_to_problem_p,
    project_solution, ratio_window, theoretical_n, verify_reduction, ProductParams,
    ReductionInstance, SimpleGraph,
};
use serde::Serialize;

use super::{read_biclique, read_graph, read_json, require_seed, Outcome, Status};
use crate::args::{
    CliqueToMwebArgs, FormulasArgs, ProblemPArgs, ProductArgs, ProjectArgs, ReduceArgs, ReduceCommand,
    VerifyArgs, VerifyKind,
};
use crate::error::{CliError, CliResult};
use crate::manifest::{with_manifest, RunManifest};

pub fn run(a: &ReduceArgs, timing: impl Fn() -> Option<f64>) -> CliResult<Outcome> {
    match &a.command {
        ReduceCommand::CliqueToMweb(a) => clique(a, timing),
        ReduceCommand::Product(a) => product(a, timing),
        ReduceCommand::ProblemP(a) => problem_p(a, timing),
        ReduceCommand::Project(a) => project(a, timing),
        ReduceCommand::Formulas(a) => formulas(a, timing),
        ReduceCommand::Verify(a) => verify(a, "reduce verify", timing),
    }
}

fn clique(a: &CliqueToMwebArgs, timing: impl Fn() -> Option<f64>) -> CliResult<Outcome> {
    let g: SimpleGraph = read_json(&a.input)?;
    let w = clique_to_mweb(&g);
    let mut manifest = RunManifest::new("reduce clique-to-mweb", a, None);
    manifest.timing = timing();
    Ok(Outcome::new(with_manifest(&w, &manifest), &a.out.out))
}

fn product(a: &ProductArgs, timing: impl Fn() -> Option<f64>) -> CliResult<Outcome> {
    let seed = require_seed(a.seed, "reduce product")?;
    let g = read_graph(&a.input)?;
    let params = ProductParams::with_delta(a.gamma, a.alpha, a.beta, a.copies, a.delta, seed)?;
    let p = gamma_product(&g, &params)?;
    let mut manifest = RunManifest::new("reduce product", a, Some(seed));
    manifest.timing = timing();
    Ok(Outcome::new(with_manifest(&p, &manifest), &a.out.out))
}

fn problem_p(a: &ProblemPArgs, timing: impl Fn() -> Option<f64>) -> CliResult<Outcome> {
    let g = read_graph(&a.input)?;
    let p = mweb_to_problem_p(&g, a.copies)?;
    let mut manifest = RunManifest::new("reduce problem-p", a, None);
    manifest.timing = timing();
    Ok(Outcome::new(with_manifest(&p, &manifest), &a.out.out))
}

#[derive(Serialize)]
struct Projection {
    u1: Vec<usize>,
    u2: Vec<usize>,
    value: f64,
}

fn project(a: &ProjectArgs, timing: impl Fn() -> Option<f64>) -> CliResult<Outcome> {
    let g = read_graph(&a.graph)?;
    let product = read_graph(&a.product)?;
    let b = read_biclique(&a.biclique)?;
    let (w, value) = project_solution(&g, &product, a.copies, &b, a.objective)?;
    let mut manifest = RunManifest::new("reduce project", a, None);
    manifest.timing = timing();
    let out = Projection { u1: w.u1, u2: w.u2, value };
    Ok(Outcome::new(with_manifest(&out, &manifest), &a.out.out))
}

#[derive(Serialize)]
struct Formulas {
    eta: u64,
    delta: f64,
    boosting_exponent: f64,
    theoretical_n: u64,
    ratio_window: (f64, f64),
    #[serde(skip_serializing_if = "Option::is_none")]
    amplification_factor: Option<f64>,
}

fn formulas(a: &FormulasArgs, timing: impl Fn() -> Option<f64>) -> CliResult<Outcome> {
    let out = Formulas {
        eta: a.eta,
        delta: a.delta,
        boosting_exponent: boosting_exponent(a.delta)?,
        theoretical_n: theoretical_n(a.eta, a.delta)?,
        ratio_window: ratio_window(a.eta as f64, a.delta)?,
        amplification_factor: a.epsilon_prime.map(|e| amplification_factor(a.delta, e)).transpose()?,
    };
    let mut manifest = RunManifest::new("reduce formulas", a, None);
    manifest.timing = timing();
    Ok(Outcome::new(with_manifest(&out, &manifest), &a.out.out))
}

pub fn verify(a: &VerifyArgs, command: &str, timing: impl Fn() -> Option<f64>) -> CliResult<Outcome> {
    let randomized = a.graph.is_none() || a.kind == VerifyKind::Product;
    let seed = if randomized { Some(require_seed(a.seed, command)?) } else { None };
    let instance = match (a.kind, &a.graph) {
        (VerifyKind::Clique, Some(path)) => ReductionInstance::Clique(read_json(path)?),
        (VerifyKind::Clique, None) => ReductionInstance::RandomClique { max_vertices: a.max_vertices },
        (VerifyKind::Product, Some(path)) => {
            let copies = a.copies.ok_or_else(|| CliError::Usage("product verification needs --copies".into()))?;
            ReductionInstance::Product {
                graph: read_graph(path)?,
                params: ProductParams::new(a.gamma, a.alpha, a.beta, copies, seed.unwrap_or(0))?,
            }
        }
        (VerifyKind::Product, None) => {
            return Err(CliError::Usage("product verification needs --graph".into()));
        }
        (VerifyKind::ProblemP, Some(path)) => {
            let graph = read_graph(path)?;
            let n_copies = a.copies.unwrap_or_else(|| mweb_core::reduce::default_problem_p_copies(&graph));
            ReductionInstance::ProblemP { graph, n_copies }
        }
        (VerifyKind::ProblemP, None) => {
            ReductionInstance::RandomProblemP { max_vertices: a.max_vertices, n_copies: a.copies }
        }
    };
    let report = verify_reduction(&instance, a.trials, seed.unwrap_or(0))?;
    let status = if report.passed { Status::Ok } else { Status::CheckFailed };
    let mut manifest = RunManifest::new(command, a, seed);
    manifest.timing = timing();
    Ok(Outcome::new(with_manifest(&report, &manifest), &a.out.out).with_status(status))
}
