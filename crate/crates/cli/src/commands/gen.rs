use mweb_core::io::write_tsv;
use mweb_core::reduce::SimpleGraph;
use mweb_core::{BinaryMatrix, Biclique, Error, WeightedBipartiteGraph};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_density, require_seed, Outcome};
use crate::args::{GenArgs, GenKind};
use crate::error::CliResult;
use crate::manifest::{tsv_with_manifest, with_manifest, RunManifest};

pub fn run(a: &GenArgs, timing: impl Fn() -> Option<f64>) -> CliResult<Outcome> {
    let seed = require_seed(a.seed, "gen")?;
    check_density(a.density)?;
    let n2 = a.n2.unwrap_or(a.n1);
    if a.n1 == 0 || n2 == 0 {
        return Err(Error::Validation(format!("dimensions must be positive, got {}x{n2}", a.n1)).into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut manifest = RunManifest::new("gen", a, Some(seed));

    let text = match a.kind {
        GenKind::RandomWeighted => {
            let g = random_weighted(&mut rng, a.n1, n2, &a.weights)?;
            manifest.timing = timing();
            with_manifest(&g, &manifest)
        }
        GenKind::PlantedBiclique => {
            let (g, planted) = planted(&mut rng, a, n2)?;
            manifest.planted = Some(planted);
            manifest.timing = timing();
            with_manifest(&g, &manifest)
        }
        GenKind::RandomBinary => {
            let cells = (0..a.n1 * n2).map(|_| rng.random_bool(a.density)).collect();
            let m = BinaryMatrix::new(a.n1, n2, cells)?;
            manifest.timing = timing();
            tsv_with_manifest(&write_tsv(&m), &manifest)
        }
        GenKind::RandomCliqueGraph => {
            let n = a.n1;
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random_bool(a.density) {
                        edges.push((i, j));
                    }
                }
            }
            let g = SimpleGraph::new(n, &edges)?;
            manifest.timing = timing();
            with_manifest(&g, &manifest)
        }
    };
    Ok(Outcome::new(text, &a.out.out))
}

fn check_weights(weights: &[f64]) -> CliResult<()> {
    if weights.is_empty() || weights.iter().any(|w| !w.is_finite()) {
        return Err(Error::Validation("--weights needs at least one finite value".into()).into());
    }
    Ok(())
}

fn random_weighted(
    rng: &mut ChaCha8Rng,
    n1: usize,
    n2: usize,
    weights: &[f64],
) -> CliResult<WeightedBipartiteGraph> {
    check_weights(weights)?;
    let cells = (0..n1 * n2).map(|_| weights[rng.random_range(0..weights.len())]).collect();
    Ok(WeightedBipartiteGraph::new(n1, n2, cells)?)
}

fn planted(rng: &mut ChaCha8Rng, a: &GenArgs, n2: usize) -> CliResult<(WeightedBipartiteGraph, Biclique)> {
    let (rows, cols) = match (a.block_rows, a.block_cols) {
        (Some(r), Some(c)) => (r, c),
        _ => return Err(Error::Validation("planted-biclique needs --block-rows and --block-cols".into()).into()),
    };
    if rows > a.n1 || cols > n2 {
        return Err(Error::Validation(format!(
            "block {rows}x{cols} does not fit in {}x{n2}",
            a.n1
        ))
        .into());
    }
    let g = random_weighted(rng, a.n1, n2, &a.weights)?;
    let top = a.weights.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let block = Biclique::new(sample(rng, a.n1, rows).into_vec(), sample(rng, n2, cols).into_vec());
    let mut cells = g.weights().to_vec();
    for &u in &block.u1 {
        for &v in &block.u2 {
            cells[u * n2 + v] = top;
        }
    }
    Ok((WeightedBipartiteGraph::new(a.n1, n2, cells)?, block))
}
