pub mod gen;
pub mod mdlh;
pub mod reduce;
pub mod samba;
pub mod solve;

use std::path::{Path, PathBuf};

use mweb_core::io::{from_json, parse_tsv};
use mweb_core::{BinaryMatrix, Biclique, WeightedBipartiteGraph};
use serde::de::DeserializeOwned;

use crate::error::{CliError, CliResult};

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A heuristic or time-limited answer.
    BestEffort,
    /// A verifier found a violated check.
    CheckFailed,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
            Status::BestEffort => 2,
        }
    }
}

pub struct Outcome {
    pub text: String,
    pub out: Option<PathBuf>,
    pub status: Status,
}

impl Outcome {
    pub fn new(text: String, out: &Option<PathBuf>) -> Self {
        Self { text, out: out.clone(), status: Status::Ok }
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }
}

pub fn require_seed(seed: Option<u64>, what: &str) -> CliResult<u64> {
    seed.ok_or_else(|| {
        CliError::Usage(format!("{what} is randomized: pass --seed or set MWEB_DEFAULT_SEED"))
    })
}

pub fn read_text(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    from_json(&read_text(path)?).map_err(|source| CliError::File { path: path.to_path_buf(), source })
}

pub fn read_graph(path: &Path) -> CliResult<WeightedBipartiteGraph> {
    read_json(path)
}

pub fn read_biclique(path: &Path) -> CliResult<Biclique> {
    mweb_core::io::biclique_from_json(&read_text(path)?)
        .map_err(|source| CliError::File { path: path.to_path_buf(), source })
}

pub fn read_matrix(path: &Path) -> CliResult<BinaryMatrix> {
    parse_tsv(&read_text(path)?).map_err(|source| CliError::File { path: path.to_path_buf(), source })
}

pub fn check_density(density: f64) -> CliResult<()> {
    if (0.0..=1.0).contains(&density) {
        Ok(())
    } else {
        Err(mweb_core::Error::Parameter(format!("density must lie in [0, 1], got {density}")).into())
    }
}
