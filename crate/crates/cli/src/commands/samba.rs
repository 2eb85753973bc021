use mweb_core::samba::{
    log2_p_star, ln_binomial_tail, refined_weights_in_base, simple_weights_in_base, LogBase,
    SambaRefinedParams, SambaSimpleParams,
};
use mweb_core::{biclique_weight, BinaryMatrix, Objective, WeightedBipartiteGraph};
use serde::Serialize;

use super::solve::{run_solver, solver_config, status_of};
use super::{read_biclique, read_json, read_matrix, Outcome};
use crate::args::{BaseArg, ModelArgs, ModelKind, SambaArgs, SambaCommand};
use crate::error::{CliError, CliResult};
use crate::manifest::{with_manifest, RunManifest};

pub fn run(a: &SambaArgs, timing: impl Fn() -> Option<f64>) -> CliResult<Outcome> {
    match &a.command {
        SambaCommand::Weights(a) => {
            let (_, g, _) = weigh(&a.model)?;
            let mut manifest = RunManifest::new("samba weights", a, None);
            manifest.timing = timing();
            Ok(Outcome::new(with_manifest(&g, &manifest), &a.out.out))
        }
        SambaCommand::Score(a) => {
            let (m, g, simple) = weigh(&a.model)?;
            let b = read_biclique(&a.biclique)?;
            let score = biclique_weight(&g, &b)?;
            let cells = (b.u1.len() * b.u2.len()) as u64;
            let edges = b.u1.iter().flat_map(|&u| b.u2.iter().map(move |&v| (u, v))).filter(|&(u, v)| m.get(u, v)).count() as u64;
            let tail = match simple {
                Some(p) if cells > 0 => Some(Tail {
                    p: p.p,
                    log2_p_star: log2_p_star(cells, edges, p.p)?,
                    log2_binomial_tail: ln_binomial_tail(edges, p.p, cells)? / std::f64::consts::LN_2,
                }),
                _ => None,
            };
            let out = Score { u1: b.u1, u2: b.u2, score, cells, edges, tail };
            let mut manifest = RunManifest::new("samba score", a, None);
            manifest.timing = timing();
            Ok(Outcome::new(with_manifest(&out, &manifest), &a.out.out))
        }
        SambaCommand::Find(a) => {
            let (_, g, _) = weigh(&a.model)?;
            let (config, seed) = solver_config(&a.solver, Objective::EdgeWeight)?;
            let r = run_solver(&g, &config)?;
            let status = status_of(&r);
            let out = Found { u1: r.witness.u1, u2: r.witness.u2, score: r.value, explored: r.explored, optimal: r.optimal };
            let mut manifest = RunManifest::new("samba find", a, seed);
            manifest.timing = timing();
            Ok(Outcome::new(with_manifest(&out, &manifest), &a.out.out).with_status(status))
        }
    }
}

#[derive(Serialize)]
struct Tail {
    p: f64,
    log2_p_star: f64,
    log2_binomial_tail: f64,
}

#[derive(Serialize)]
struct Score {
    u1: Vec<usize>,
    u2: Vec<usize>,
    score: f64,
    cells: u64,
    edges: u64,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    tail: Option<Tail>,
}

#[derive(Serialize)]
struct Found {
    u1: Vec<usize>,
    u2: Vec<usize>,
    score: f64,
    explored: u64,
    optimal: bool,
}

fn weigh(a: &ModelArgs) -> CliResult<(BinaryMatrix, WeightedBipartiteGraph, Option<SambaSimpleParams>)> {
    let m = read_matrix(&a.input)?;
    let base = match a.base {
        BaseArg::Two => LogBase::Two,
        BaseArg::E => LogBase::E,
    };
    match a.model {
        ModelKind::Simple => {
            if a.params.is_some() {
                return Err(CliError::Usage("--params only applies to the refined model".into()));
            }
            let (g, p) = simple_weights_in_base(&m, base)?;
            Ok((m, g, Some(p)))
        }
        ModelKind::Refined => {
            let path = a.params.as_ref().ok_or_else(|| CliError::Usage("the refined model needs --params".into()))?;
            let r: SambaRefinedParams = read_json(path)?;
            let g = refined_weights_in_base(&m, &r, base)?;
            Ok((m, g, None))
        }
    }
}
