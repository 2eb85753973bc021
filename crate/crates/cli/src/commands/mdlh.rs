use mweb_core::mdlh::{brute_force_mdlh, solve_mdlh, validate_summary, MAX_ORACLE_DIMENSION_SUM};
use mweb_core::{BinaryMatrix, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{check_density, read_matrix, require_seed, Outcome, Status};
use crate::args::{MdlhArgs, MdlhCommand, MdlhVerifyArgs};
use crate::error::CliResult;
use crate::manifest::{with_manifest, RunManifest};

pub fn run(a: &MdlhArgs, timing: impl Fn() -> Option<f64>) -> CliResult<Outcome> {
    match &a.command {
        MdlhCommand::Solve(a) => {
            let m = read_matrix(&a.input)?;
            let s = if a.oracle { brute_force_mdlh(&m)? } else { solve_mdlh(&m)? };
            let mut manifest = RunManifest::new("mdlh solve", a, None);
            manifest.timing = timing();
            Ok(Outcome::new(with_manifest(&s, &manifest), &a.out.out))
        }
        MdlhCommand::Verify(a) => verify(a, timing),
    }
}

#[derive(Serialize)]
struct Mismatch {
    n1: usize,
    n2: usize,
    rows: Vec<String>,
    solver_length: usize,
    oracle_length: usize,
    solver_valid: bool,
}

#[derive(Serialize)]
struct Report {
    trials: usize,
    max_dim: usize,
    agreements: usize,
    mismatches: Vec<Mismatch>,
    passed: bool,
}

fn verify(a: &MdlhVerifyArgs, timing: impl Fn() -> Option<f64>) -> CliResult<Outcome> {
    let seed = require_seed(a.seed, "mdlh verify")?;
    check_density(a.density)?;
    if a.max_dim == 0 || 2 * a.max_dim > MAX_ORACLE_DIMENSION_SUM {
        return Err(Error::Capacity(format!(
            "--max-dim must lie in 1..={} for the brute-force oracle",
            MAX_ORACLE_DIMENSION_SUM / 2
        ))
        .into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    for _ in 0..a.trials {
        let n1 = rng.random_range(1..=a.max_dim);
        let n2 = rng.random_range(1..=a.max_dim);
        let cells = (0..n1 * n2).map(|_| rng.random_bool(a.density)).collect();
        let m = BinaryMatrix::new(n1, n2, cells)?;
        let s = solve_mdlh(&m)?;
        let oracle = brute_force_mdlh(&m)?;
        let valid = validate_summary(&m, &s);
        if !valid || s.length != oracle.length {
            let rows = (0..n1)
                .map(|i| (0..n2).map(|j| if m.get(i, j) { '1' } else { '0' }).collect())
                .collect();
            mismatches.push(Mismatch {
                n1,
                n2,
                rows,
                solver_length: s.length,
                oracle_length: oracle.length,
                solver_valid: valid,
            });
        }
    }
    let passed = mismatches.is_empty();
    let report = Report {
        trials: a.trials,
        max_dim: a.max_dim,
        agreements: a.trials - mismatches.len(),
        mismatches,
        passed,
    };
    let mut manifest = RunManifest::new("mdlh verify", a, Some(seed));
    manifest.timing = timing();
    let status = if passed { Status::Ok } else { Status::CheckFailed };
    Ok(Outcome::new(with_manifest(&report, &manifest), &a.out.out).with_status(status))
}
